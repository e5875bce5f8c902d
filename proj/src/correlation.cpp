#include "corrtree/correlation.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <mutex>

#include "corrtree/error.hpp"
#include "corrtree/parallel.hpp"

namespace corrtree {
namespace {

// Sum of a[k] * b[k] with four interleaved accumulators combined in a fixed
// order.
double dot(const double* a, const double* b, std::size_t n) noexcept {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    s0 += a[k] * b[k];
    s1 += a[k + 1] * b[k + 1];
    s2 += a[k + 2] * b[k + 2];
    s3 += a[k + 3] * b[k + 3];
  }
  for (; k < n; ++k) s0 += a[k] * b[k];
  return (s0 + s1) + (s2 + s3);
}

std::string pair_name(const ReturnsMatrix& y, std::size_t i, std::size_t j) {
  return "'" + y.assets[i] + "'/'" + y.assets[j] + "'";
}

// Pairwise-complete Pearson coefficient for columns with gaps.
double pairwise_rho(const ReturnsMatrix& y, const std::vector<double>& xi,
                    const std::vector<double>& xj, std::size_t i, std::size_t j,
                    std::size_t min_overlap) {
  const std::size_t T = xi.size();
  double si = 0.0, sj = 0.0;
  std::size_t count = 0;
  for (std::size_t t = 0; t < T; ++t)
    if (!is_missing(xi[t]) && !is_missing(xj[t])) {
      si += xi[t];
      sj += xj[t];
      ++count;
    }
  if (count < min_overlap || count == 0)
    throw InsufficientDataError("pair " + pair_name(y, i, j) + " shares " +
                                std::to_string(count) + " observations, need " +
                                std::to_string(min_overlap));
  const double mi = si / static_cast<double>(count), mj = sj / static_cast<double>(count);
  double cov = 0.0, vi = 0.0, vj = 0.0, ri = 0.0, rj = 0.0;
  for (std::size_t t = 0; t < T; ++t)
    if (!is_missing(xi[t]) && !is_missing(xj[t])) {
      const double a = xi[t] - mi, b = xj[t] - mj;
      cov += a * b;
      vi += a * a;
      vj += b * b;
      ri += xi[t] * xi[t];
      rj += xj[t] * xj[t];
    }
  if (detail::degenerate_spread(vi, ri)) throw DegenerateAssetError(y.assets[i]);
  if (detail::degenerate_spread(vj, rj)) throw DegenerateAssetError(y.assets[j]);
  return detail::clamp_unit(cov / std::sqrt(vi * vj));
}

}  // namespace

CorrelationMatrix pearson_matrix(const ReturnsMatrix& y, std::size_t min_overlap) {
  const std::size_t n = y.n_assets(), T = y.n_times();
  if (y.observations.cols() != n) throw ShapeError("observation matrix does not match assets");

  // Asset-major copies; complete columns are centered once up front.
  std::vector<std::vector<double>> cols(n);
  std::vector<char> complete(n, 1);
  std::vector<double> ss(n, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    cols[i] = y.observations.column(i);
    double sum = 0.0;
    for (double v : cols[i]) {
      if (is_missing(v)) {
        complete[i] = 0;
        break;
      }
      sum += v;
    }
    if (!complete[i] || T == 0) continue;
    const double mean = sum / static_cast<double>(T);
    double raw = 0.0, centered = 0.0;
    for (double& v : cols[i]) {
      raw += v * v;
      v -= mean;
      centered += v * v;
    }
    ss[i] = detail::degenerate_spread(centered, raw) ? 0.0 : centered;
  }
  // Raw columns are needed again for the gap-aware path.
  std::vector<std::vector<double>> raw_cols;
  bool any_gaps = false;
  for (char c : complete) any_gaps |= (c == 0);
  if (any_gaps) {
    raw_cols.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!complete[i]) raw_cols[i] = std::move(cols[i]);
      else raw_cols[i] = y.observations.column(i);
  }

  CorrelationMatrix out{y.assets, Matrix(n, n, 1.0)};

  // The first failure in (i, j) order wins so error reporting is stable.
  std::mutex error_mutex;
  std::size_t error_rank = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;
  auto record = [&](std::size_t rank, std::exception_ptr e) {
    std::lock_guard lock(error_mutex);
    if (rank < error_rank) {
      error_rank = rank;
      error = std::move(e);
    }
  };

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t rank = i * n + j;
      try {
        double r = 0.0;
        if (complete[i] && complete[j]) {
          if (T < min_overlap || T == 0)
            throw InsufficientDataError("pair " + pair_name(y, i, j) + " shares " +
                                        std::to_string(T) + " observations, need " +
                                        std::to_string(min_overlap));
          if (ss[i] == 0.0) throw DegenerateAssetError(y.assets[i]);
          if (ss[j] == 0.0) throw DegenerateAssetError(y.assets[j]);
          r = detail::clamp_unit(dot(cols[i].data(), cols[j].data(), T) /
                                 std::sqrt(ss[i] * ss[j]));
        } else {
          r = pairwise_rho(y, raw_cols[i], raw_cols[j], i, j, min_overlap);
        }
        out.rho(i, j) = r;
        out.rho(j, i) = r;
      } catch (...) {
        record(rank, std::current_exception());
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

CorrelationCensus census(const CorrelationMatrix& c) {
  validate(c);
  CorrelationCensus out;
  out.n_assets = c.size();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const double r = c.rho(i, j);
      if (r >= 0.5) ++out.strong;
      else if (r >= 0.0) ++out.weak;
      else ++out.negative;
    }
  return out;
}

void validate(const CorrelationMatrix& c, double tol) {
  const std::size_t n = c.size();
  if (!c.rho.square() || c.rho.rows() != n)
    throw ShapeError("correlation matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (c.rho(i, i) != 1.0) throw DomainError("correlation diagonal must be 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = c.rho(i, j);
      if (!(std::abs(r) <= 1.0 + tol))
        throw DomainError("correlation outside [-1, 1] for '" + c.assets[i] + "'/'" +
                          c.assets[j] + "'");
      if (std::abs(r - c.rho(j, i)) > tol) throw DomainError("correlation matrix not symmetric");
    }
  }
}

}  // namespace corrtree
