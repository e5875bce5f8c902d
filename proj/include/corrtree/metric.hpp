#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "corrtree/correlation.hpp"
#include "corrtree/matrix.hpp"

namespace corrtree {

// d(i, j) = sqrt(2 (1 - rho(i, j))), symmetric with zero diagonal.
struct DistanceMatrix {
  std::vector<std::string> assets;
  Matrix d;

  std::size_t size() const noexcept { return assets.size(); }
};

double correlation_distance(double rho);  // throws DomainError outside [-1, 1]

DistanceMatrix to_distance(const CorrelationMatrix& c);

enum class Axiom { identity, symmetry, triangle };
std::string_view to_string(Axiom a) noexcept;

// One violated instance. For triangle violations, d(i, j) > d(i, k) + d(k, j);
// `excess` is by how much.
struct AxiomViolation {
  Axiom axiom;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double excess = 0.0;
};

inline constexpr double kDefaultAxiomTolerance = 1e-9;

// Reports every violated instance of: d(i, j) = 0 iff i = j, symmetry, and
// the triangle inequality d(i, j) <= d(i, k) + d(k, j) (checked per
// unordered pair i < j and each k). Throws ShapeError on a non-square input.
std::vector<AxiomViolation> check_metric_axioms(const Matrix& d,
                                                double tol = kDefaultAxiomTolerance);
inline std::vector<AxiomViolation> check_metric_axioms(const DistanceMatrix& d,
                                                       double tol = kDefaultAxiomTolerance) {
  return check_metric_axioms(d.d, tol);
}

// Throws ShapeError/DomainError when `d` is not square, not symmetric, has a
// nonzero diagonal or a non-finite or negative entry.
void validate(const DistanceMatrix& d);

}  // namespace corrtree
