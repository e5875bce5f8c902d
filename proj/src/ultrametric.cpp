#include "corrtree/ultrametric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "corrtree/error.hpp"

namespace corrtree {
namespace {

struct Neighbor {
  std::size_t node;
  double weight;
};

std::vector<std::vector<Neighbor>> adjacency(const SpanningTree& tree) {
  std::vector<std::vector<Neighbor>> adj(tree.size());
  for (const auto& e : tree.edges) {
    adj[e.a].push_back({e.b, e.weight});
    adj[e.b].push_back({e.a, e.weight});
  }
  return adj;
}

}  // namespace

UltrametricMatrix subdominant_ultrametric(const SpanningTree& tree) {
  validate(tree);
  const std::size_t n = tree.size();
  const auto adj = adjacency(tree);
  UltrametricMatrix out{tree.assets, Matrix(n, n, 0.0)};

#pragma omp parallel
  {
    std::vector<std::size_t> stack;
    std::vector<std::size_t> parent(n);
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t rr = 0; rr < static_cast<std::ptrdiff_t>(n); ++rr) {
      const auto root = static_cast<std::size_t>(rr);
      auto row = out.dhat.row(root);
      parent[root] = root;
      row[root] = 0.0;
      stack.assign(1, root);
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const auto& nb : adj[u]) {
          if (nb.node == parent[u]) continue;
          parent[nb.node] = u;
          row[nb.node] = std::max(row[u], nb.weight);
          stack.push_back(nb.node);
        }
      }
    }
  }
  return out;
}

Dendrogram single_linkage(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (n < 2) throw SizeError("dendrogram needs at least 2 assets");
  if (!d.d.square() || d.d.rows() != n) throw ShapeError("distance matrix is not n x n");

  std::vector<std::size_t> rank(n);
  {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return d.assets[x] < d.assets[y]; });
    for (std::size_t r = 0; r < n; ++r) rank[idx[r]] = r;
  }

  // Inter-cluster key: the smallest (distance, lo label rank, hi label rank)
  // over all leaf pairs across the two clusters, with the lo leaf recorded.
  struct Key {
    double w;
    std::size_t lo, hi;
    std::size_t lo_leaf;
    bool operator<(const Key& o) const noexcept {
      return std::tie(w, lo, hi) < std::tie(o.w, o.lo, o.hi);
    }
  };
  std::vector<std::vector<Key>> key(n, std::vector<Key>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double w = d.d(std::min(i, j), std::max(i, j));
      if (!std::isfinite(w)) throw DomainError("non-finite distance");
      const bool i_lo = rank[i] < rank[j];
      key[i][j] = {w, std::min(rank[i], rank[j]), std::max(rank[i], rank[j]), i_lo ? i : j};
    }

  // slot -> current cluster id; slot -> leaves it holds.
  std::vector<std::size_t> cluster_id(n);
  std::iota(cluster_id.begin(), cluster_id.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  std::vector<char> active(n, 1);

  Dendrogram dg{d.assets, {}};
  dg.merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (active[j] && (bi == n || key[i][j] < key[bi][bj])) {
          bi = i;
          bj = j;
        }
    }
    const Key best = key[bi][bj];
    const bool lo_in_i = std::find(members[bi].begin(), members[bi].end(), best.lo_leaf) !=
                         members[bi].end();
    const std::size_t first = lo_in_i ? bi : bj, second = lo_in_i ? bj : bi;
    dg.merges.push_back({cluster_id[first], cluster_id[second], best.w});

    // Slot bi now holds the union; single-linkage update by key minimum.
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == bi || k == bj) continue;
      const Key m = std::min(key[bi][k], key[bj][k]);
      key[bi][k] = m;
      key[k][bi] = m;
    }
    members[bi].insert(members[bi].end(), members[bj].begin(), members[bj].end());
    members[bj].clear();
    active[bj] = 0;
    cluster_id[bi] = n + step;
  }
  return dg;
}

Dendrogram dendrogram_from_tree(const SpanningTree& tree) {
  validate(tree);
  const std::size_t n = tree.size();
  UnionFind uf(n);
  std::vector<std::size_t> cluster_of_root(n);
  std::iota(cluster_of_root.begin(), cluster_of_root.end(), std::size_t{0});
  Dendrogram dg{tree.assets, {}};
  for (const auto& e : tree.edges) {
    const std::size_t ra = uf.find(e.a), rb = uf.find(e.b);
    dg.merges.push_back({cluster_of_root[ra], cluster_of_root[rb], e.weight});
    uf.unite(ra, rb);
    cluster_of_root[uf.find(ra)] = n + dg.merges.size() - 1;
  }
  return dg;
}

std::vector<std::vector<std::size_t>> cluster_members(const Dendrogram& dg) {
  const std::size_t n = dg.size();
  std::vector<std::vector<std::size_t>> members(n + dg.merges.size());
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (std::size_t k = 0; k < dg.merges.size(); ++k) {
    auto& m = members[n + k];
    m = members[dg.merges[k].a];
    m.insert(m.end(), members[dg.merges[k].b].begin(), members[dg.merges[k].b].end());
  }
  return members;
}

Matrix cophenetic(const Dendrogram& dg) {
  validate(dg);
  const std::size_t n = dg.size();
  const auto members = cluster_members(dg);
  Matrix out(n, n, 0.0);
  for (const auto& m : dg.merges)
    for (std::size_t x : members[m.a])
      for (std::size_t y : members[m.b]) {
        out(x, y) = m.height;
        out(y, x) = m.height;
      }
  return out;
}

std::vector<std::size_t> cut(const Dendrogram& dg, double h) {
  validate(dg);
  const std::size_t n = dg.size();
  UnionFind uf(n);
  const auto members = cluster_members(dg);
  for (const auto& m : dg.merges)
    if (m.height <= h) uf.unite(members[m.a].front(), members[m.b].front());
  std::vector<std::size_t> id(n), label_of_root(n, n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (label_of_root[r] == n) label_of_root[r] = next++;
    id[i] = label_of_root[r];
  }
  return id;
}

void validate(const Dendrogram& dg) {
  const std::size_t n = dg.size();
  if (n < 2) throw SizeError("dendrogram needs at least 2 leaves");
  if (dg.merges.size() != n - 1) throw SizeError("dendrogram must have n - 1 merges");
  std::vector<char> live(2 * n - 1, 0);
  std::fill(live.begin(), live.begin() + static_cast<std::ptrdiff_t>(n), 1);
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < dg.merges.size(); ++k) {
    const auto& m = dg.merges[k];
    if (m.a >= n + k || m.b >= n + k || m.a == m.b || !live[m.a] || !live[m.b])
      throw DomainError("merge " + std::to_string(k) + " does not join two live clusters");
    if (!(m.height >= prev)) throw DomainError("merge heights must be non-decreasing");
    prev = m.height;
    live[m.a] = live[m.b] = 0;
    live[n + k] = 1;
  }
}

}  // namespace corrtree
