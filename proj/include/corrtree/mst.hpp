#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "corrtree/metric.hpp"

namespace corrtree {

// Disjoint-set forest with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when x and y were already connected.
  bool unite(std::size_t x, std::size_t y) noexcept {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Tree edge between asset indices a and b, where assets[a] < assets[b]
// lexicographically. `order` is the position at which the edge was accepted.
struct TreeEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;
  std::size_t order = 0;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// Spanning tree over `assets`; edges are kept in construction order.
struct SpanningTree {
  std::vector<std::string> assets;
  std::vector<TreeEdge> edges;

  std::size_t size() const noexcept { return assets.size(); }
  const std::string& label_a(const TreeEdge& e) const { return assets[e.a]; }
  const std::string& label_b(const TreeEdge& e) const { return assets[e.b]; }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

using LabelPair = std::pair<std::string, std::string>;

// Minimum spanning tree by greedy acceptance of the shortest remaining
// distance that joins two components (Kruskal). Candidates are ordered by
// (distance, label_a, label_b). Throws SizeError for fewer than 2 assets and
// DomainError for a non-finite distance.
SpanningTree build_mst(const DistanceMatrix& d);

inline constexpr std::size_t kOracleMaxAssets = 8;

// Exhaustive minimum over every labeled spanning tree (Prüfer decoding);
// equal totals are broken by the sorted list of label pairs. Only for
// n <= kOracleMaxAssets.
SpanningTree mst_oracle(const DistanceMatrix& d);

// Sum of edge weights taken in ascending order, so trees with the same
// weight multiset have bitwise-equal totals.
double total_weight(const SpanningTree& t);

std::map<std::string, std::size_t> tree_degrees(const SpanningTree& t);

// Unordered endpoint pairs as (smaller label, larger label).
std::set<LabelPair> edge_set(const SpanningTree& t);

// Throws SizeError/DomainError unless `t` has n - 1 edges forming a tree
// with canonically ordered endpoints and sequential construction order.
void validate(const SpanningTree& t);

// Decodes a Prüfer sequence of length n - 2 over vertices 0..n-1 into the
// n - 1 edges of its labeled tree (each pair as (min, max)).
std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(const std::vector<std::size_t>& seq,
                                                               std::size_t n);

}  // namespace corrtree
