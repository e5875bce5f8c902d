#include "corrtree/pipeline.hpp"

#include <fstream>

#include "corrtree/error.hpp"
#include "corrtree/export.hpp"
#include "corrtree/metric.hpp"
#include "corrtree/mst.hpp"
#include "corrtree/ultrametric.hpp"

namespace corrtree {

std::string_view to_string(ExportFormat f) noexcept {
  switch (f) {
    case ExportFormat::dot: return "dot";
    case ExportFormat::graphml: return "graphml";
    case ExportFormat::newick: return "newick";
    case ExportFormat::csv: return "csv";
    case ExportFormat::json: return "json";
  }
  return "";
}

ExportFormat parse_export_format(std::string_view name) {
  for (auto f : {ExportFormat::dot, ExportFormat::graphml, ExportFormat::newick, ExportFormat::csv,
                 ExportFormat::json})
    if (to_string(f) == name) return f;
  throw SpecError("unknown export format '" + std::string(name) + "'");
}

std::set<ExportFormat> parse_export_formats(std::string_view list) {
  std::set<ExportFormat> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    if (!item.empty()) out.insert(parse_export_format(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

void validate(const PipelineConfig& cfg) {
  if (cfg.formats.empty()) throw SpecError("at least one export format is required");
  if (cfg.window && cfg.load.time_column == TimeColumn::absent)
    throw SpecError("rolling windows need time-ordered input");
}

std::string window_dir_name(std::size_t index, std::size_t count) {
  const std::size_t width = std::max<std::size_t>(4, std::to_string(count ? count - 1 : 0).size());
  std::string s = std::to_string(index);
  return "window_" + std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

ReturnsMatrix prepare_signal(const PipelineConfig& cfg, bool* had_time_column) {
  TimeSeriesPanel panel = load_panel(cfg.input, cfg.load, had_time_column);
  if (cfg.rebase) panel = rebase(panel, *cfg.rebase, cfg.numeraire);
  return make_signal(panel, cfg.signal);
}

PipelineResult render_pipeline(const ReturnsMatrix& y, const PipelineConfig& cfg) {
  validate(cfg);
  const auto has = [&](ExportFormat f) { return cfg.formats.contains(f); };

  const CorrelationMatrix corr = pearson_matrix(y, cfg.min_overlap);
  const DistanceMatrix dist = to_distance(corr);
  const SpanningTree tree = build_mst(dist);
  const Dendrogram dg = dendrogram_from_tree(tree);

  PipelineResult result;
  result.census = census(corr);
  auto& out = result.artifacts;
  if (has(ExportFormat::csv)) {
    out.emplace_back("correlation.csv", matrix_csv(corr.assets, corr.rho));
    out.emplace_back("distance.csv", matrix_csv(dist.assets, dist.d));
    const UltrametricMatrix um = subdominant_ultrametric(tree);
    out.emplace_back("ultrametric.csv", matrix_csv(um.assets, um.dhat));
  }
  if (has(ExportFormat::json)) out.emplace_back("census.json", census_json(result.census) + "\n");
  if (has(ExportFormat::dot)) out.emplace_back("mst.dot", export_dot(tree));
  if (has(ExportFormat::graphml)) out.emplace_back("mst.graphml", export_graphml(tree));
  if (has(ExportFormat::newick)) out.emplace_back("dendrogram.nwk", export_newick(dg) + "\n");

  if (cfg.window) {
    const TreeSequence seq = rolling_trees(y, *cfg.window, cfg.min_overlap);
    const std::filesystem::path base = "dynamics";
    out.emplace_back(base / "survival.csv", survival_csv(seq));
    for (std::size_t k = 0; k < seq.trees.size(); ++k) {
      const auto dir = base / window_dir_name(k, seq.trees.size());
      if (has(ExportFormat::dot)) out.emplace_back(dir / "mst.dot", export_dot(seq.trees[k]));
      if (has(ExportFormat::graphml)) out.emplace_back(dir / "mst.graphml", export_graphml(seq.trees[k]));
      if (has(ExportFormat::newick))
        out.emplace_back(dir / "dendrogram.nwk", export_newick(dendrogram_from_tree(seq.trees[k])) + "\n");
    }
  }
  return result;
}

PipelineResult compute_pipeline(const PipelineConfig& cfg) {
  validate(cfg);
  bool had_time = true;
  const ReturnsMatrix y = prepare_signal(cfg, &had_time);
  if (cfg.window && !had_time) throw SpecError("rolling windows need time-ordered input");
  return render_pipeline(y, cfg);
}

void write_artifacts(const std::filesystem::path& dir, const std::vector<Artifact>& artifacts) {
  for (const auto& [rel, content] : artifacts) {
    const auto path = dir / rel;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    os << content;
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  }
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  PipelineResult result = compute_pipeline(cfg);
  write_artifacts(cfg.output_dir, result.artifacts);
  return result;
}

}  // namespace corrtree
