#include "corrtree/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "corrtree/error.hpp"
#include "corrtree/text.hpp"

namespace corrtree {
namespace {

bool parse_integer(const std::string& s, long long& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_double(const std::string& s, double& out) {
  const char* first = s.data();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && !std::isnan(out);
}

bool looks_like_time_header(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  static const std::unordered_set<std::string> names{"",     "date",     "time", "timestamp",
                                                     "datetime", "t", "index"};
  return names.contains(name);
}

// Comparator that follows the key-set ordering decided by sort_keys.
struct KeyLess {
  bool numeric;
  bool operator()(const std::string& a, const std::string& b) const {
    if (numeric) {
      long long x = 0, y = 0;
      parse_integer(a, x);
      parse_integer(b, y);
      return x < y;
    }
    return a < b;
  }
};

}  // namespace

std::size_t TimeSeriesPanel::index_of(const std::string& asset) const {
  const auto it = std::find(assets.begin(), assets.end(), asset);
  if (it == assets.end()) throw LookupError("unknown asset '" + asset + "'");
  return static_cast<std::size_t>(it - assets.begin());
}

bool all_integer_keys(const std::vector<std::string>& keys) {
  long long v = 0;
  return std::all_of(keys.begin(), keys.end(),
                     [&](const std::string& k) { return parse_integer(k, v); });
}

void sort_keys(std::vector<std::string>& keys) {
  std::sort(keys.begin(), keys.end(), KeyLess{all_integer_keys(keys)});
}

void validate(const TimeSeriesPanel& panel) {
  std::unordered_set<std::string> seen;
  for (const auto& a : panel.assets) {
    if (a.empty()) throw SchemaError("empty asset label");
    if (!seen.insert(a).second) throw SchemaError("duplicate asset label '" + a + "'");
  }
  if (panel.values.rows() != panel.timestamps.size() ||
      panel.values.cols() != panel.assets.size())
    throw SchemaError("values matrix does not match timestamps x assets");
  const KeyLess less{all_integer_keys(panel.timestamps)};
  for (std::size_t t = 1; t < panel.timestamps.size(); ++t)
    if (!less(panel.timestamps[t - 1], panel.timestamps[t]))
      throw SchemaError("timestamps not strictly increasing at '" + panel.timestamps[t] + "'");
}

TimeSeriesPanel read_panel(std::istream& in, const LoadOptions& options, bool* had_time_column) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!text::trim(line).empty()) break;
  }
  if (line_no == 0 || text::trim(line).empty()) throw ParseError(line_no, "missing header row");
  if (!text::split_record(line, options.delimiter, header))
    throw ParseError(line_no, "unterminated quote");

  const bool has_time = options.time_column == TimeColumn::present ||
                        (options.time_column == TimeColumn::automatic &&
                         looks_like_time_header(header.front()));
  const std::size_t first_asset = has_time ? 1 : 0;
  if (had_time_column) *had_time_column = has_time;

  TimeSeriesPanel panel;
  panel.assets.assign(header.begin() + static_cast<std::ptrdiff_t>(first_asset), header.end());
  {
    std::unordered_set<std::string> seen;
    for (const auto& a : panel.assets) {
      if (a.empty()) throw SchemaError("empty asset label in header");
      if (!seen.insert(a).second) throw SchemaError("duplicate asset label '" + a + "'");
    }
  }
  if (panel.assets.size() < 2)
    throw SchemaError("panel needs at least 2 assets, found " + std::to_string(panel.assets.size()));

  const std::unordered_set<std::string> missing(options.missing_markers.begin(),
                                                options.missing_markers.end());
  std::vector<std::string> keys;
  std::vector<double> cells;
  std::vector<std::string> fields;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    if (!text::split_record(line, options.delimiter, fields))
      throw ParseError(line_no, "unterminated quote");
    if (fields.size() != header.size())
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                    std::to_string(fields.size()));
    keys.push_back(has_time ? fields.front() : std::to_string(row));
    if (has_time && keys.back().empty()) throw ParseError(line_no, "empty timestamp");
    for (std::size_t c = first_asset; c < fields.size(); ++c) {
      double v = 0.0;
      if (missing.contains(fields[c])) {
        v = kMissing;
      } else if (!parse_double(fields[c], v)) {
        throw ParseError(line_no, "not a number: '" + fields[c] + "'");
      }
      cells.push_back(v);
    }
    ++row;
  }

  // Order rows by timestamp key.
  const std::size_t n = panel.assets.size();
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const KeyLess less{all_integer_keys(keys)};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return less(keys[a], keys[b]); });
  panel.values = Matrix(keys.size(), n);
  panel.timestamps.reserve(keys.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    const std::size_t src = order[t];
    if (t > 0 && !less(keys[order[t - 1]], keys[src]))
      throw SchemaError("duplicate timestamp '" + keys[src] + "'");
    panel.timestamps.push_back(keys[src]);
    std::copy_n(cells.begin() + static_cast<std::ptrdiff_t>(src * n), n, panel.values.row(t).begin());
  }
  return panel;
}

TimeSeriesPanel load_panel(const std::filesystem::path& path, const LoadOptions& options,
                           bool* had_time_column) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return read_panel(in, options, had_time_column);
}

void write_panel(std::ostream& out, const TimeSeriesPanel& panel, const WriteOptions& options) {
  const char d = options.delimiter;
  out << "timestamp";
  for (const auto& a : panel.assets) out << d << text::csv_field(a, d);
  out << '\n';
  for (std::size_t t = 0; t < panel.n_times(); ++t) {
    out << text::csv_field(panel.timestamps[t], d);
    for (std::size_t i = 0; i < panel.n_assets(); ++i) {
      const double v = panel.values(t, i);
      out << d << (is_missing(v) ? options.missing_marker : text::shortest(v));
    }
    out << '\n';
  }
}

TimeSeriesPanel align_panels(const std::vector<TimeSeriesPanel>& panels) {
  if (panels.empty()) throw AlignmentError("no panels to align");
  if (panels.size() == 1) return panels.front();

  std::unordered_set<std::string> labels;
  for (const auto& p : panels)
    for (const auto& a : p.assets)
      if (!labels.insert(a).second) throw SchemaError("asset '" + a + "' appears in two panels");

  std::unordered_set<std::string> common(panels.front().timestamps.begin(),
                                         panels.front().timestamps.end());
  for (std::size_t k = 1; k < panels.size(); ++k) {
    const std::unordered_set<std::string> next(panels[k].timestamps.begin(),
                                               panels[k].timestamps.end());
    std::erase_if(common, [&](const std::string& t) { return !next.contains(t); });
  }
  if (common.empty()) throw AlignmentError("panels share no timestamps");

  TimeSeriesPanel out;
  out.timestamps.assign(common.begin(), common.end());
  sort_keys(out.timestamps);
  std::size_t total = 0;
  for (const auto& p : panels) total += p.n_assets();
  out.values = Matrix(out.timestamps.size(), total);

  std::size_t col = 0;
  for (const auto& p : panels) {
    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t t = 0; t < p.n_times(); ++t) row_of.emplace(p.timestamps[t], t);
    for (std::size_t t = 0; t < out.timestamps.size(); ++t) {
      const std::size_t src = row_of.at(out.timestamps[t]);
      for (std::size_t i = 0; i < p.n_assets(); ++i) out.values(t, col + i) = p.values(src, i);
    }
    out.assets.insert(out.assets.end(), p.assets.begin(), p.assets.end());
    col += p.n_assets();
  }
  return out;
}

}  // namespace corrtree
