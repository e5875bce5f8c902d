#include "corrtree/serial.hpp"

#include <cmath>

#include "corrtree/error.hpp"

namespace corrtree::serial {

CorrelationMatrix pearson_matrix(const ReturnsMatrix& y, std::size_t min_overlap) {
  const std::size_t n = y.n_assets(), T = y.n_times();
  if (y.observations.cols() != n) throw ShapeError("observation matrix does not match assets");
  CorrelationMatrix out{y.assets, Matrix(n, n, 1.0)};
  std::vector<double> xi, xj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      xi.clear();
      xj.clear();
      for (std::size_t t = 0; t < T; ++t) {
        const double a = y.observations(t, i), b = y.observations(t, j);
        if (is_missing(a) || is_missing(b)) continue;
        xi.push_back(a);
        xj.push_back(b);
      }
      const std::size_t N = xi.size();
      if (N < min_overlap || N == 0)
        throw InsufficientDataError("pair '" + y.assets[i] + "'/'" + y.assets[j] + "' shares " +
                                    std::to_string(N) + " observations, need " +
                                    std::to_string(min_overlap));
      double si = 0.0, sj = 0.0;
      for (std::size_t t = 0; t < N; ++t) {
        si += xi[t];
        sj += xj[t];
      }
      const double mi = si / static_cast<double>(N), mj = sj / static_cast<double>(N);
      double cov = 0.0, vi = 0.0, vj = 0.0, ri = 0.0, rj = 0.0;
      for (std::size_t t = 0; t < N; ++t) {
        cov += (xi[t] - mi) * (xj[t] - mj);
        vi += (xi[t] - mi) * (xi[t] - mi);
        vj += (xj[t] - mj) * (xj[t] - mj);
        ri += xi[t] * xi[t];
        rj += xj[t] * xj[t];
      }
      if (detail::degenerate_spread(vi, ri)) throw DegenerateAssetError(y.assets[i]);
      if (detail::degenerate_spread(vj, rj)) throw DegenerateAssetError(y.assets[j]);
      const double r = detail::clamp_unit(cov / std::sqrt(vi * vj));
      out.rho(i, j) = r;
      out.rho(j, i) = r;
    }
  return out;
}

DistanceMatrix to_distance(const CorrelationMatrix& c) {
  const std::size_t n = c.size();
  DistanceMatrix out{c.assets, Matrix(n, n, 0.0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.d(i, j) = correlation_distance(c.rho(i, j));
  return out;
}

UltrametricMatrix subdominant_ultrametric(const SpanningTree& tree) {
  validate(tree);
  const std::size_t n = tree.size();
  // Adjacency as an edge-weight matrix; NaN marks "no edge".
  Matrix w(n, n, kMissing);
  for (const auto& e : tree.edges) {
    w(e.a, e.b) = e.weight;
    w(e.b, e.a) = e.weight;
  }
  UltrametricMatrix out{tree.assets, Matrix(n, n, 0.0)};
  std::vector<std::size_t> prev(n);
  std::vector<char> seen(n);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // Breadth-first search from i, then walk the path back from j.
      std::fill(seen.begin(), seen.end(), 0);
      queue.assign(1, i);
      seen[i] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const std::size_t u = queue[q];
        for (std::size_t v = 0; v < n; ++v)
          if (!seen[v] && !is_missing(w(u, v))) {
            seen[v] = 1;
            prev[v] = u;
            queue.push_back(v);
          }
      }
      double m = 0.0;
      for (std::size_t v = j; v != i; v = prev[v]) m = std::max(m, w(v, prev[v]));
      out.dhat(i, j) = m;
      out.dhat(j, i) = m;
    }
  return out;
}

TreeSequence rolling_trees(const ReturnsMatrix& y, const WindowSpec& w, std::size_t min_overlap) {
  TreeSequence seq;
  seq.windows = make_windows(y.n_times(), w);
  for (const auto& win : seq.windows)
    seq.trees.push_back(
        build_mst(serial::to_distance(serial::pearson_matrix(y.slice(win.start, win.end), min_overlap))));
  return seq;
}

ReturnsMatrix generate(const FactorModelSpec& spec) {
  validate(spec);
  ReturnsMatrix out;
  std::vector<std::size_t> group_index;
  for (std::size_t g = 0; g < spec.groups.size(); ++g) group_index.insert(group_index.end(), spec.groups[g].members, g);
  // Labels come from the parallel generator's convention.
  FactorModelSpec tiny = spec;
  tiny.length = 3;
  out.assets = corrtree::generate(tiny).assets;
  const std::size_t n = out.assets.size(), T = spec.length;
  for (std::size_t t = 0; t < T; ++t) out.timestamps.push_back(std::to_string(t));
  out.observations = Matrix(T, n);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t k = 0; k < n; ++k) {
      double v = spec.factor_loading * keyed_normal(spec.seed, 1, group_index[k], t) +
                 spec.noise_sigma * keyed_normal(spec.seed, 2, k, t);
      if (spec.global_loading > 0.0) v += spec.global_loading * keyed_normal(spec.seed, 3, 0, t);
      out.observations(t, k) = v;
    }
  return out;
}

}  // namespace corrtree::serial
