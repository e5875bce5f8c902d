#include "corrtree/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corrtree/error.hpp"

namespace corrtree {

std::string_view to_string(SignalKind kind) noexcept {
  switch (kind) {
    case SignalKind::log_return: return "log-return";
    case SignalKind::raw: return "raw";
    case SignalKind::rank: return "rank";
    case SignalKind::zscore: return "zscore";
  }
  return "raw";
}

SignalKind parse_signal_kind(std::string_view name) {
  for (auto k : {SignalKind::log_return, SignalKind::raw, SignalKind::rank, SignalKind::zscore})
    if (to_string(k) == name) return k;
  throw SpecError("unknown signal kind '" + std::string(name) + "'");
}

ReturnsMatrix ReturnsMatrix::slice(std::size_t first, std::size_t last) const {
  ReturnsMatrix out;
  out.assets = assets;
  out.timestamps.assign(timestamps.begin() + static_cast<std::ptrdiff_t>(first),
                        timestamps.begin() + static_cast<std::ptrdiff_t>(last));
  out.observations = observations.slice_rows(first, last);
  out.kind = kind;
  return out;
}

ReturnsMatrix log_returns(const TimeSeriesPanel& panel) {
  const std::size_t T = panel.n_times(), n = panel.n_assets();
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t i = 0; i < n; ++i) {
      const double p = panel.values(t, i);
      if (!is_missing(p) && !(p > 0.0))
        throw DomainError("non-positive value for asset '" + panel.assets[i] + "' at '" +
                          panel.timestamps[t] + "'");
    }

  ReturnsMatrix out;
  out.assets = panel.assets;
  out.kind = SignalKind::log_return;
  if (T < 2) {
    out.observations = Matrix(0, n);
    return out;
  }
  out.timestamps.assign(panel.timestamps.begin() + 1, panel.timestamps.end());
  out.observations = Matrix(T - 1, n);
  for (std::size_t t = 0; t + 1 < T; ++t)
    for (std::size_t i = 0; i < n; ++i) {
      const double a = panel.values(t, i), b = panel.values(t + 1, i);
      out.observations(t, i) =
          (is_missing(a) || is_missing(b)) ? kMissing : std::log(b) - std::log(a);
    }
  return out;
}

ReturnsMatrix raw_signal(const TimeSeriesPanel& panel) {
  return {panel.assets, panel.timestamps, panel.values, SignalKind::raw};
}

ReturnsMatrix rank_signal(const TimeSeriesPanel& panel) {
  const std::size_t T = panel.n_times(), n = panel.n_assets();
  ReturnsMatrix out{panel.assets, panel.timestamps, Matrix(T, n), SignalKind::rank};
  std::vector<std::size_t> order(n);
  for (std::size_t t = 0; t < T; ++t) {
    const auto row = panel.values.row(t);
    for (std::size_t i = 0; i < n; ++i)
      if (is_missing(row[i]))
        throw DomainError("missing value for asset '" + panel.assets[i] + "' at '" +
                          panel.timestamps[t] + "' cannot be ranked");
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return row[a] > row[b]; });
    // Positions [k, m) hold one tie group; each gets the mean of ranks k+1..m.
    for (std::size_t k = 0; k < n;) {
      std::size_t m = k + 1;
      while (m < n && row[order[m]] == row[order[k]]) ++m;
      const double mean_rank = 0.5 * static_cast<double>(k + 1 + m);
      for (std::size_t q = k; q < m; ++q) out.observations(t, order[q]) = mean_rank;
      k = m;
    }
  }
  return out;
}

ReturnsMatrix zscore(const TimeSeriesPanel& panel) {
  const std::size_t T = panel.n_times(), n = panel.n_assets();
  ReturnsMatrix out{panel.assets, panel.timestamps, Matrix(T, n, kMissing), SignalKind::zscore};
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t t = 0; t < T; ++t)
      if (const double v = panel.values(t, i); !is_missing(v)) {
        sum += v;
        ++count;
      }
    if (count < 2) throw DegenerateAssetError(panel.assets[i]);
    const double mean = sum / static_cast<double>(count);
    double ss = 0.0;
    for (std::size_t t = 0; t < T; ++t)
      if (const double v = panel.values(t, i); !is_missing(v)) ss += (v - mean) * (v - mean);
    const double sigma = std::sqrt(ss / static_cast<double>(count));
    if (!(sigma > 1e-12 * std::max(1.0, std::abs(mean)))) throw DegenerateAssetError(panel.assets[i]);
    for (std::size_t t = 0; t < T; ++t)
      if (const double v = panel.values(t, i); !is_missing(v))
        out.observations(t, i) = (v - mean) / sigma;
  }
  return out;
}

ReturnsMatrix make_signal(const TimeSeriesPanel& panel, SignalKind kind) {
  switch (kind) {
    case SignalKind::log_return: return log_returns(panel);
    case SignalKind::raw: return raw_signal(panel);
    case SignalKind::rank: return rank_signal(panel);
    case SignalKind::zscore: return zscore(panel);
  }
  return raw_signal(panel);
}

TimeSeriesPanel rebase(const TimeSeriesPanel& panel, const std::string& base,
                       const std::string& numeraire) {
  if (base == numeraire) return panel;
  const std::size_t b = panel.index_of(base);
  if (std::find(panel.assets.begin(), panel.assets.end(), numeraire) != panel.assets.end())
    throw SchemaError("numeraire '" + numeraire + "' is already an asset");

  const std::size_t T = panel.n_times(), n = panel.n_assets();
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t i = 0; i < n; ++i) {
      const double v = panel.values(t, i);
      if (!is_missing(v) && !(v > 0.0))
        throw DomainError("non-positive quote for '" + panel.assets[i] + "' at '" +
                          panel.timestamps[t] + "'");
    }

  TimeSeriesPanel out;
  out.timestamps = panel.timestamps;
  for (std::size_t i = 0; i < n; ++i)
    if (i != b) out.assets.push_back(panel.assets[i]);
  out.assets.push_back(numeraire);
  out.values = Matrix(T, n);
  for (std::size_t t = 0; t < T; ++t) {
    const double q = panel.values(t, b);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == b) continue;
      const double v = panel.values(t, i);
      out.values(t, c++) = (is_missing(v) || is_missing(q)) ? kMissing : v / q;
    }
    out.values(t, c) = is_missing(q) ? kMissing : 1.0 / q;
  }
  return out;
}

}  // namespace corrtree
