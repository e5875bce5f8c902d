#include "corrtree/dynamics.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <set>

#include "corrtree/error.hpp"
#include "corrtree/metric.hpp"

namespace corrtree {

std::vector<Window> make_windows(std::size_t length, const WindowSpec& w) {
  if (w.width < 3) throw SpecError("window width must be at least 3");
  if (w.step < 1) throw SpecError("window step must be at least 1");
  if (w.width > length)
    throw SpecError("window width " + std::to_string(w.width) + " exceeds series length " +
                    std::to_string(length));
  const std::size_t count = (length - w.width) / w.step + 1;
  std::vector<Window> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back({k * w.step, k * w.step + w.width});
  return out;
}

SpanningTree static_tree(const ReturnsMatrix& y, std::size_t min_overlap) {
  return build_mst(to_distance(pearson_matrix(y, min_overlap)));
}

TreeSequence rolling_trees(const ReturnsMatrix& y, const WindowSpec& w, std::size_t min_overlap) {
  TreeSequence seq;
  seq.windows = make_windows(y.n_times(), w);
  seq.trees.resize(seq.windows.size());

  std::exception_ptr error;
  std::size_t error_window = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t kk = 0; kk < static_cast<std::ptrdiff_t>(seq.windows.size()); ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    try {
      seq.trees[k] = static_tree(y.slice(seq.windows[k].start, seq.windows[k].end), min_overlap);
    } catch (...) {
#pragma omp critical(corrtree_rolling_error)
      if (k < error_window) {
        error_window = k;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return seq;
}

double edge_survival(const SpanningTree& a, const SpanningTree& b) {
  if (std::set(a.assets.begin(), a.assets.end()) != std::set(b.assets.begin(), b.assets.end()))
    throw ComparisonError("trees span different asset sets");
  if (a.edges.size() != b.edges.size() || a.edges.empty())
    throw ComparisonError("trees must both have n - 1 edges");
  const auto ea = edge_set(a), eb = edge_set(b);
  std::size_t shared = 0;
  for (const auto& e : ea) shared += eb.count(e);
  return static_cast<double>(shared) / static_cast<double>(a.edges.size());
}

std::vector<double> survival_series(const TreeSequence& seq) {
  std::vector<double> out(seq.trees.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t k = 1; k < seq.trees.size(); ++k)
    out[k] = edge_survival(seq.trees[k - 1], seq.trees[k]);
  return out;
}

SplitComparison split_compare(const ReturnsMatrix& y, std::size_t split_index,
                              std::size_t min_overlap) {
  const std::size_t T = y.n_times();
  if (split_index < 3 || split_index > T || T - split_index < 3)
    throw SizeError("split at " + std::to_string(split_index) + " of " + std::to_string(T) +
                    " leaves a segment shorter than 3 observations");
  SplitComparison out;
  out.before = static_tree(y.slice(0, split_index), min_overlap);
  out.after = static_tree(y.slice(split_index, T), min_overlap);
  out.survival = edge_survival(out.before, out.after);
  return out;
}

}  // namespace corrtree
