#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "corrtree/correlation.hpp"
#include "corrtree/mst.hpp"
#include "corrtree/transform.hpp"

namespace corrtree {

struct WindowSpec {
  std::size_t width = 0;
  std::size_t step = 1;
};

// Window k covers rows [start, end) = [k * step, k * step + width).
struct Window {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

struct TreeSequence {
  std::vector<Window> windows;
  std::vector<SpanningTree> trees;
};

// floor((length - width) / step) + 1 windows. Throws SpecError when
// width < 3, step < 1 or width > length.
std::vector<Window> make_windows(std::size_t length, const WindowSpec& w);

// The static pipeline: correlation, distance, minimum spanning tree.
SpanningTree static_tree(const ReturnsMatrix& y, std::size_t min_overlap = kDefaultMinOverlap);

// One tree per window, windows evaluated in parallel. Output order follows
// window index.
TreeSequence rolling_trees(const ReturnsMatrix& y, const WindowSpec& w,
                           std::size_t min_overlap = kDefaultMinOverlap);

// Fraction of a's edges (as unordered endpoint pairs) also present in b.
// Throws ComparisonError when the asset sets differ.
double edge_survival(const SpanningTree& a, const SpanningTree& b);

// survival[k] = edge_survival(trees[k - 1], trees[k]); survival[0] is NaN.
std::vector<double> survival_series(const TreeSequence& seq);

struct SplitComparison {
  SpanningTree before;
  SpanningTree after;
  double survival = 0.0;
};

// Trees for rows [0, split) and [split, T) and their edge survival. Throws
// SizeError when either segment has fewer than 3 rows.
SplitComparison split_compare(const ReturnsMatrix& y, std::size_t split_index,
                              std::size_t min_overlap = kDefaultMinOverlap);

}  // namespace corrtree
