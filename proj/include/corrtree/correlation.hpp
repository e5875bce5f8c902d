#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corrtree/matrix.hpp"
#include "corrtree/transform.hpp"

namespace corrtree {

// Symmetric Pearson correlation matrix with unit diagonal.
struct CorrelationMatrix {
  std::vector<std::string> assets;
  Matrix rho;

  std::size_t size() const noexcept { return assets.size(); }
};

// Counts of off-diagonal pairs by correlation level:
// strong rho >= 1/2, weak 0 <= rho < 1/2, negative rho < 0.
struct CorrelationCensus {
  std::size_t strong = 0;
  std::size_t weak = 0;
  std::size_t negative = 0;
  std::size_t n_assets = 0;

  std::size_t total() const noexcept { return strong + weak + negative; }
  friend bool operator==(const CorrelationCensus&, const CorrelationCensus&) = default;
};

inline constexpr std::size_t kDefaultMinOverlap = 3;

// Pearson correlation of every asset pair over their jointly present rows,
// using population (divide-by-N) temporal averages. Entries are clamped to
// [-1, 1] and the diagonal is exactly 1. Pairs are assembled in parallel;
// each entry's arithmetic is fixed, so the result does not depend on the
// thread count.
//
// Throws InsufficientDataError when a pair shares fewer than min_overlap
// rows and DegenerateAssetError when an asset is constant on an overlap.
CorrelationMatrix pearson_matrix(const ReturnsMatrix& y,
                                 std::size_t min_overlap = kDefaultMinOverlap);

CorrelationCensus census(const CorrelationMatrix& c);

// Throws ShapeError/DomainError when `c` breaks a CorrelationMatrix invariant.
void validate(const CorrelationMatrix& c, double tol = 1e-12);

namespace detail {
// True when a centered sum of squares is negligible next to the raw one,
// i.e. the series is constant up to rounding.
inline bool degenerate_spread(double centered_ss, double raw_ss) noexcept {
  return !(centered_ss > 1e-24 * raw_ss);
}
inline double clamp_unit(double r) noexcept { return r > 1.0 ? 1.0 : (r < -1.0 ? -1.0 : r); }
}  // namespace detail

}  // namespace corrtree
