#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corrtree/matrix.hpp"
#include "corrtree/metric.hpp"
#include "corrtree/mst.hpp"

namespace corrtree {

struct UltrametricMatrix {
  std::vector<std::string> assets;
  Matrix dhat;

  std::size_t size() const noexcept { return assets.size(); }
};

// Largest ultrametric below the tree's source distances: dhat(i, j) is the
// heaviest edge on the tree path between i and j. One traversal per root,
// roots processed in parallel.
UltrametricMatrix subdominant_ultrametric(const SpanningTree& tree);

// Agglomerative merge tree. Clusters 0..n-1 are the leaves; merge k creates
// cluster n + k from clusters `a` and `b` at `height`.
struct Merge {
  std::size_t a = 0;
  std::size_t b = 0;
  double height = 0.0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

struct Dendrogram {
  std::vector<std::string> leaves;
  std::vector<Merge> merges;

  std::size_t size() const noexcept { return leaves.size(); }
  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;
};

// Single-linkage agglomeration computed directly from the distances:
// repeatedly merges the two clusters with the smallest minimum pairwise
// distance. Equal distances are resolved by the (label_a, label_b) order of
// the realizing leaf pair, so merges follow build_mst's acceptance order.
// Within a merge, `a` is the cluster holding the lexicographically smaller
// endpoint of that pair. Throws SizeError for fewer than 2 assets.
Dendrogram single_linkage(const DistanceMatrix& d);

// The same dendrogram read off a spanning tree: one merge per edge in
// construction order.
Dendrogram dendrogram_from_tree(const SpanningTree& tree);

// Cophenetic matrix: entry (i, j) is the height of the merge that first
// joins leaves i and j.
Matrix cophenetic(const Dendrogram& dg);

// Flat clusters after applying every merge with height <= h. Returns one
// cluster id per leaf, numbered 0, 1, ... in order of first leaf.
std::vector<std::size_t> cut(const Dendrogram& dg, double h);

// Leaf indices under each cluster id (leaves and merged clusters).
std::vector<std::vector<std::size_t>> cluster_members(const Dendrogram& dg);

// Throws SizeError/DomainError unless there are n - 1 merges with
// non-decreasing heights, each consuming two live clusters.
void validate(const Dendrogram& dg);

}  // namespace corrtree
