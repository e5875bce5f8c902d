#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corrtree/correlation.hpp"
#include "corrtree/dynamics.hpp"
#include "corrtree/ingest.hpp"
#include "corrtree/transform.hpp"

namespace corrtree {

enum class ExportFormat { dot, graphml, newick, csv, json };

std::string_view to_string(ExportFormat f) noexcept;
ExportFormat parse_export_format(std::string_view name);  // throws SpecError

// Comma-separated list, e.g. "dot,newick".
std::set<ExportFormat> parse_export_formats(std::string_view list);

struct PipelineConfig {
  std::filesystem::path input;
  LoadOptions load;
  SignalKind signal = SignalKind::log_return;
  std::optional<std::string> rebase;
  std::string numeraire = "NUMERAIRE";
  std::optional<WindowSpec> window;
  std::size_t min_overlap = kDefaultMinOverlap;
  std::filesystem::path output_dir;
  std::set<ExportFormat> formats;
};

// Throws SpecError when no export format is requested.
void validate(const PipelineConfig& cfg);

// Relative output path and its full contents.
using Artifact = std::pair<std::filesystem::path, std::string>;

struct PipelineResult {
  CorrelationCensus census;
  std::vector<Artifact> artifacts;
};

// Loads a panel per `cfg`, applies rebase and signal transform.
ReturnsMatrix prepare_signal(const PipelineConfig& cfg, bool* had_time_column = nullptr);

// Runs the full chain on an already-transformed signal and renders every
// requested artifact in memory. Nothing is written.
PipelineResult render_pipeline(const ReturnsMatrix& y, const PipelineConfig& cfg);

// prepare_signal + render_pipeline. Nothing is written.
PipelineResult compute_pipeline(const PipelineConfig& cfg);

// Writes artifacts under `dir`, creating directories as needed.
void write_artifacts(const std::filesystem::path& dir, const std::vector<Artifact>& artifacts);

// compute_pipeline then write_artifacts into cfg.output_dir. Files are only
// written once every computation has succeeded.
PipelineResult run_pipeline(const PipelineConfig& cfg);

// Zero-padded window directory name, e.g. "window_0007".
std::string window_dir_name(std::size_t index, std::size_t count);

}  // namespace corrtree
