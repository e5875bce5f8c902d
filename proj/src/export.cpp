#include "corrtree/export.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "corrtree/text.hpp"

namespace corrtree {
namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string newick_label(const std::string& s) {
  if (s.find_first_of(" \t()[]':;,") == std::string::npos) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + '\'';
}

std::vector<std::size_t> sorted_by_label(const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx(labels.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  return idx;
}

}  // namespace

std::string matrix_csv(const std::vector<std::string>& labels, const Matrix& m) {
  std::ostringstream os;
  for (const auto& l : labels) os << ',' << text::csv_field(l);
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << text::csv_field(labels[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) os << ',' << text::shortest(m(i, j));
    os << '\n';
  }
  return os.str();
}

std::string census_json(const CorrelationCensus& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n_assets;
  j["strong"] = c.strong;
  j["weak"] = c.weak;
  j["negative"] = c.negative;
  return j.dump();
}

std::string export_dot(const SpanningTree& t) {
  std::ostringstream os;
  os << "graph mst {\n";
  for (std::size_t i : sorted_by_label(t.assets)) os << "  " << dot_quote(t.assets[i]) << ";\n";
  for (const auto& e : t.edges)
    os << "  " << dot_quote(t.assets[e.a]) << " -- " << dot_quote(t.assets[e.b]) << " [label=\""
       << text::fixed(e.weight, 4) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_graphml(const SpanningTree& t) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
     << "  <key id=\"order\" for=\"edge\" attr.name=\"construction_order\" attr.type=\"int\"/>\n"
     << "  <graph id=\"mst\" edgedefault=\"undirected\">\n";
  for (std::size_t i : sorted_by_label(t.assets))
    os << "    <node id=\"" << xml_escape(t.assets[i]) << "\"/>\n";
  for (const auto& e : t.edges)
    os << "    <edge id=\"e" << e.order << "\" source=\"" << xml_escape(t.assets[e.a])
       << "\" target=\"" << xml_escape(t.assets[e.b]) << "\">\n"
       << "      <data key=\"weight\">" << text::shortest(e.weight) << "</data>\n"
       << "      <data key=\"order\">" << e.order << "</data>\n"
       << "    </edge>\n";
  os << "  </graph>\n</graphml>\n";
  return os.str();
}

std::string export_newick(const Dendrogram& dg) {
  validate(dg);
  const std::size_t n = dg.size();
  std::vector<double> height(n + dg.merges.size(), 0.0);
  std::vector<std::string> repr(n + dg.merges.size());
  for (std::size_t i = 0; i < n; ++i) repr[i] = newick_label(dg.leaves[i]);
  for (std::size_t k = 0; k < dg.merges.size(); ++k) {
    const auto& m = dg.merges[k];
    const double h = m.height;
    height[n + k] = h;
    repr[n + k] = "(" + repr[m.a] + ":" + text::shortest((h - height[m.a]) / 2.0) + "," +
                  repr[m.b] + ":" + text::shortest((h - height[m.b]) / 2.0) + ")";
    repr[m.a].clear();
    repr[m.b].clear();
  }
  return repr.back() + ":0.0;";
}

std::string survival_csv(const TreeSequence& seq) {
  const auto s = survival_series(seq);
  std::ostringstream os;
  os << "window_index,start,end,survival_vs_previous\n";
  for (std::size_t k = 0; k < seq.windows.size(); ++k) {
    os << k << ',' << seq.windows[k].start << ',' << seq.windows[k].end << ',';
    if (k > 0) os << text::shortest(s[k]);
    os << '\n';
  }
  return os.str();
}

}  // namespace corrtree
