// corrtree: correlation-based hierarchical taxonomies from time-series panels.
//
// Exit status: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "corrtree/correlation.hpp"
#include "corrtree/dynamics.hpp"
#include "corrtree/error.hpp"
#include "corrtree/export.hpp"
#include "corrtree/ingest.hpp"
#include "corrtree/metric.hpp"
#include "corrtree/mst.hpp"
#include "corrtree/parallel.hpp"
#include "corrtree/pipeline.hpp"
#include "corrtree/synthgen.hpp"
#include "corrtree/transform.hpp"
#include "corrtree/ultrametric.hpp"

namespace {

using namespace corrtree;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string input;
  std::string delimiter = ",";
  std::vector<std::string> missing{"", "NA"};
  std::string time_column = "auto";
  std::string signal = "log-return";
  std::string rebase;
  std::string numeraire = "NUMERAIRE";
  std::size_t min_overlap = kDefaultMinOverlap;
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("-i,--input", f.input, "Delimited panel file")->required();
  cmd->add_option("--delimiter", f.delimiter, "Field delimiter (single character)")->capture_default_str();
  cmd->add_option("--missing", f.missing, "Missing-value markers (repeatable)");
  cmd->add_option("--time-column", f.time_column, "First column holds timestamps")
      ->check(CLI::IsMember({"auto", "yes", "no"}))
      ->capture_default_str();
  cmd->add_option("--signal", f.signal, "Signal transform")
      ->check(CLI::IsMember({"log-return", "raw", "rank", "zscore"}))
      ->capture_default_str();
  cmd->add_option("--rebase", f.rebase, "Re-express quotes in this base asset");
  cmd->add_option("--numeraire", f.numeraire, "Label of the common quote currency")->capture_default_str();
  cmd->add_option("--min-overlap", f.min_overlap, "Minimum jointly present rows per pair")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

PipelineConfig to_config(const InputFlags& f) {
  if (f.delimiter.size() != 1) throw UsageError("--delimiter must be a single character");
  PipelineConfig cfg;
  cfg.input = f.input;
  cfg.load.delimiter = f.delimiter.front();
  cfg.load.missing_markers = f.missing;
  cfg.load.time_column = f.time_column == "yes"  ? TimeColumn::present
                         : f.time_column == "no" ? TimeColumn::absent
                                                 : TimeColumn::automatic;
  cfg.signal = parse_signal_kind(f.signal);
  if (!f.rebase.empty()) cfg.rebase = f.rebase;
  cfg.numeraire = f.numeraire;
  cfg.min_overlap = f.min_overlap;
  return cfg;
}

// Writes to `path`, or standard output when empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  os << content;
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
}

std::optional<WindowSpec> window_from(std::size_t width, std::size_t step) {
  if (width == 0) return std::nullopt;
  return WindowSpec{width, step};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-based hierarchical taxonomies of time-series panels"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");

  InputFlags in;
  std::string out_path;
  std::string out_dir;
  std::string format;
  std::string formats = "dot,graphml,newick,csv,json";
  std::size_t width = 0, step = 1;

  auto* corr = app.add_subcommand("corr", "Pearson correlation matrix as CSV");
  auto* dist = app.add_subcommand("dist", "Correlation distance matrix as CSV");
  auto* mst = app.add_subcommand("mst", "Minimum spanning tree as DOT or GraphML");
  auto* dendro = app.add_subcommand("dendro", "Single-linkage dendrogram as Newick, or ultrametric CSV");
  auto* cen = app.add_subcommand("census", "Strong/weak/negative pair counts as JSON");
  for (auto* cmd : {corr, dist, mst, dendro, cen}) {
    add_input_flags(cmd, in);
    cmd->add_option("-o,--out", out_path, "Output file (default: standard output)");
  }
  mst->add_option("--format", format, "dot or graphml")->check(CLI::IsMember({"dot", "graphml"}));
  dendro->add_option("--format", format, "newick or csv")->check(CLI::IsMember({"newick", "csv"}));

  auto* dyn = app.add_subcommand("dynamics", "Rolling-window trees and edge survival");
  add_input_flags(dyn, in);
  dyn->add_option("--width", width, "Window width in observations")->required();
  dyn->add_option("--step", step, "Window step in observations")->capture_default_str();
  dyn->add_option("--out-dir", out_dir, "Output directory")->required();
  dyn->add_option("--formats", formats, "Per-window tree formats (dot,graphml,newick)");

  auto* run = app.add_subcommand("run", "Full pipeline: matrices, tree, dendrogram, census");
  add_input_flags(run, in);
  run->add_option("--out-dir", out_dir, "Output directory")->required();
  run->add_option("--formats", formats, "Subset of dot,graphml,newick,csv,json")->capture_default_str();
  auto* width_opt = run->add_option("--width", width, "Rolling window width (enables dynamics)");
  run->add_option("--step", step, "Rolling window step")->needs(width_opt)->capture_default_str();

  std::string groups = "3x10";
  FactorModelSpec spec;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic factor-model panel");
  synth->add_option("--groups", groups, "AxB (A groups of B) or comma-separated sizes")->capture_default_str();
  synth->add_option("--loading", spec.factor_loading, "Group factor loading in (0, 1)")->capture_default_str();
  synth->add_option("--noise", spec.noise_sigma, "Idiosyncratic noise sigma")->capture_default_str();
  synth->add_option("--global-loading", spec.global_loading, "Market-wide factor loading")->capture_default_str();
  synth->add_option("--length", spec.length, "Number of observations")->capture_default_str();
  synth->add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
  synth->add_option("--out", out_path, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  set_threads(threads);

  try {
    if (synth->parsed()) {
      spec.groups = parse_groups(groups);
      const ReturnsMatrix y = generate(spec);
      std::ostringstream os;
      write_panel(os, TimeSeriesPanel{y.assets, y.timestamps, y.observations});
      emit(out_path, os.str());
      return 0;
    }

    PipelineConfig cfg = to_config(in);

    if (run->parsed() || dyn->parsed()) {
      cfg.formats = parse_export_formats(formats);
      cfg.output_dir = out_dir;
      cfg.window = window_from(width, step);
      if (dyn->parsed()) {
        // Only the per-window artifacts.
        validate(cfg);
        bool had_time = true;
        const ReturnsMatrix y = prepare_signal(cfg, &had_time);
        if (!had_time) throw SpecError("rolling windows need time-ordered input");
        const TreeSequence seq = rolling_trees(y, *cfg.window, cfg.min_overlap);
        std::vector<Artifact> artifacts{{"survival.csv", survival_csv(seq)}};
        for (std::size_t k = 0; k < seq.trees.size(); ++k) {
          const std::filesystem::path dir = window_dir_name(k, seq.trees.size());
          if (cfg.formats.contains(ExportFormat::dot))
            artifacts.emplace_back(dir / "mst.dot", export_dot(seq.trees[k]));
          if (cfg.formats.contains(ExportFormat::graphml))
            artifacts.emplace_back(dir / "mst.graphml", export_graphml(seq.trees[k]));
          if (cfg.formats.contains(ExportFormat::newick))
            artifacts.emplace_back(dir / "dendrogram.nwk",
                                   export_newick(dendrogram_from_tree(seq.trees[k])) + "\n");
        }
        write_artifacts(cfg.output_dir, artifacts);
        return 0;
      }
      const PipelineResult result = run_pipeline(cfg);
      std::cout << census_json(result.census) << '\n';
      return 0;
    }

    const ReturnsMatrix y = prepare_signal(cfg);
    const CorrelationMatrix c = pearson_matrix(y, cfg.min_overlap);
    if (cen->parsed()) {
      emit(out_path, census_json(census(c)) + "\n");
    } else if (corr->parsed()) {
      emit(out_path, matrix_csv(c.assets, c.rho));
    } else {
      const DistanceMatrix d = to_distance(c);
      if (dist->parsed()) {
        emit(out_path, matrix_csv(d.assets, d.d));
      } else {
        const SpanningTree tree = build_mst(d);
        if (mst->parsed()) {
          emit(out_path, format == "graphml" ? export_graphml(tree) : export_dot(tree));
        } else if (format == "csv") {
          const UltrametricMatrix um = subdominant_ultrametric(tree);
          emit(out_path, matrix_csv(um.assets, um.dhat));
        } else {
          emit(out_path, export_newick(dendrogram_from_tree(tree)) + "\n");
        }
      }
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
