#include "corrtree/metric.hpp"

#include <cmath>

#include "corrtree/error.hpp"

namespace corrtree {

double correlation_distance(double rho) {
  if (!(rho >= -1.0 && rho <= 1.0))
    throw DomainError("correlation " + std::to_string(rho) + " outside [-1, 1]");
  return std::sqrt(2.0 * (1.0 - rho));
}

DistanceMatrix to_distance(const CorrelationMatrix& c) {
  const std::size_t n = c.size();
  if (!c.rho.square() || c.rho.rows() != n) throw ShapeError("correlation matrix is not n x n");
  for (double r : c.rho.data())
    if (!(r >= -1.0 && r <= 1.0))
      throw DomainError("correlation " + std::to_string(r) + " outside [-1, 1]");

  DistanceMatrix out{c.assets, Matrix(n, n, 0.0)};
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < n; ++j)
      out.d(i, j) = i == j ? 0.0 : std::sqrt(2.0 * (1.0 - c.rho(i, j)));
  }
  return out;
}

std::string_view to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::identity: return "identity";
    case Axiom::symmetry: return "symmetry";
    case Axiom::triangle: return "triangle";
  }
  return "";
}

std::vector<AxiomViolation> check_metric_axioms(const Matrix& d, double tol) {
  if (!d.square()) throw ShapeError("distance matrix is not square");
  const std::size_t n = d.rows();
  std::vector<AxiomViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d(i, i)) > tol) out.push_back({Axiom::identity, i, i, i, std::abs(d(i, i))});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(d(i, j) > tol)) out.push_back({Axiom::identity, i, j, j, tol - d(i, j)});
      if (!(std::abs(d(i, j) - d(j, i)) <= tol))
        out.push_back({Axiom::symmetry, i, j, j, std::abs(d(i, j) - d(j, i))});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double excess = d(i, j) - (d(i, k) + d(k, j));
        if (excess > tol) out.push_back({Axiom::triangle, i, j, k, excess});
      }
  return out;
}

void validate(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (!d.d.square() || d.d.rows() != n) throw ShapeError("distance matrix is not n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (d.d(i, i) != 0.0) throw DomainError("distance diagonal must be 0");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = d.d(i, j);
      if (!std::isfinite(v))
        throw DomainError("non-finite distance for '" + d.assets[i] + "'/'" + d.assets[j] + "'");
      if (v < 0.0) throw DomainError("negative distance");
      if (v != d.d(j, i)) throw DomainError("distance matrix not symmetric");
    }
  }
}

}  // namespace corrtree
