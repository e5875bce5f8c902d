#include "corrtree/mst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corrtree/error.hpp"

namespace corrtree {
namespace {

// Rank of each asset in lexicographic label order.
std::vector<std::size_t> label_ranks(const std::vector<std::string>& assets) {
  std::vector<std::size_t> idx(assets.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return assets[x] < assets[y]; });
  std::vector<std::size_t> rank(assets.size());
  for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = r;
  return rank;
}

TreeEdge canonical_edge(const std::vector<std::string>& assets, std::size_t x, std::size_t y,
                        double w) {
  if (assets[y] < assets[x]) std::swap(x, y);
  return {x, y, w, 0};
}

void check_input(const DistanceMatrix& d) {
  if (d.size() < 2) throw SizeError("spanning tree needs at least 2 assets");
  if (!d.d.square() || d.d.rows() != d.size()) throw ShapeError("distance matrix is not n x n");
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (!std::isfinite(d.d(i, j)))
        throw DomainError("non-finite distance for '" + d.assets[i] + "'/'" + d.assets[j] + "'");
}

}  // namespace

SpanningTree build_mst(const DistanceMatrix& d) {
  check_input(d);
  const std::size_t n = d.size();
  const auto rank = label_ranks(d.assets);

  struct Candidate {
    double w;
    std::size_t lo, hi;  // label ranks, lo < hi
    std::size_t a, b;    // asset indices in label order
  };
  std::vector<Candidate> cands;
  cands.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool swap = rank[j] < rank[i];
      const std::size_t a = swap ? j : i, b = swap ? i : j;
      cands.push_back({d.d(i, j), rank[a], rank[b], a, b});
    }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.w != y.w) return x.w < y.w;
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.hi < y.hi;
  });

  SpanningTree tree{d.assets, {}};
  tree.edges.reserve(n - 1);
  UnionFind uf(n);
  for (const auto& c : cands) {
    if (!uf.unite(c.a, c.b)) continue;
    tree.edges.push_back({c.a, c.b, c.w, tree.edges.size()});
    if (tree.edges.size() == n - 1) break;
  }
  return tree;
}

std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(const std::vector<std::size_t>& seq,
                                                               std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t v : seq) ++degree[v];
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(n - 1);
  for (std::size_t v : seq) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    --degree[leaf];
    --degree[v];
  }
  std::size_t u = n, w = n;
  for (std::size_t x = 0; x < n; ++x)
    if (degree[x] == 1) (u == n ? u : w) = x;
  edges.emplace_back(u, w);
  return edges;
}

SpanningTree mst_oracle(const DistanceMatrix& d) {
  check_input(d);
  const std::size_t n = d.size();
  if (n > kOracleMaxAssets)
    throw SizeError("oracle enumeration limited to " + std::to_string(kOracleMaxAssets) + " assets");

  auto make_tree = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    SpanningTree t{d.assets, {}};
    for (auto [x, y] : pairs) t.edges.push_back(canonical_edge(d.assets, x, y, d.d(x, y)));
    std::sort(t.edges.begin(), t.edges.end(), [&](const TreeEdge& p, const TreeEdge& q) {
      if (p.weight != q.weight) return p.weight < q.weight;
      if (d.assets[p.a] != d.assets[q.a]) return d.assets[p.a] < d.assets[q.a];
      return d.assets[p.b] < d.assets[q.b];
    });
    for (std::size_t k = 0; k < t.edges.size(); ++k) t.edges[k].order = k;
    return t;
  };
  auto sorted_pairs = [](const SpanningTree& t) {
    auto s = edge_set(t);
    return std::vector<LabelPair>(s.begin(), s.end());
  };

  if (n == 2) return make_tree({{0, 1}});

  std::vector<std::size_t> seq(n - 2, 0);
  SpanningTree best;
  double best_total = std::numeric_limits<double>::infinity();
  std::vector<LabelPair> best_pairs;
  while (true) {
    SpanningTree t = make_tree(prufer_decode(seq, n));
    const double total = total_weight(t);
    if (total < best_total || (total == best_total && sorted_pairs(t) < best_pairs)) {
      best_total = total;
      best_pairs = sorted_pairs(t);
      best = std::move(t);
    }
    // Next sequence in base-n counting order.
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
    if (k == seq.size()) break;
  }
  return best;
}

double total_weight(const SpanningTree& t) {
  std::vector<double> w;
  w.reserve(t.edges.size());
  for (const auto& e : t.edges) w.push_back(e.weight);
  std::sort(w.begin(), w.end());
  double s = 0.0;
  for (double x : w) s += x;
  return s;
}

std::map<std::string, std::size_t> tree_degrees(const SpanningTree& t) {
  std::map<std::string, std::size_t> deg;
  for (const auto& a : t.assets) deg[a] = 0;
  for (const auto& e : t.edges) {
    ++deg[t.assets[e.a]];
    ++deg[t.assets[e.b]];
  }
  return deg;
}

std::set<LabelPair> edge_set(const SpanningTree& t) {
  std::set<LabelPair> s;
  for (const auto& e : t.edges) s.emplace(std::minmax(t.assets[e.a], t.assets[e.b]));
  return s;
}

void validate(const SpanningTree& t) {
  const std::size_t n = t.size();
  if (n < 2) throw SizeError("spanning tree needs at least 2 assets");
  if (t.edges.size() != n - 1)
    throw SizeError("tree on " + std::to_string(n) + " assets must have " + std::to_string(n - 1) +
                    " edges, has " + std::to_string(t.edges.size()));
  UnionFind uf(n);
  for (std::size_t k = 0; k < t.edges.size(); ++k) {
    const auto& e = t.edges[k];
    if (e.a >= n || e.b >= n || !(t.assets[e.a] < t.assets[e.b]))
      throw DomainError("tree edge endpoints out of range or not in label order");
    if (e.order != k) throw DomainError("tree edges not in construction order");
    if (!std::isfinite(e.weight)) throw DomainError("non-finite tree edge weight");
    if (!uf.unite(e.a, e.b)) throw DomainError("tree edges contain a cycle");
  }
}

}  // namespace corrtree
