#include <doctest.h>

#include <cmath>
#include <random>

#include "corrtree/error.hpp"
#include "corrtree/serial.hpp"
#include "corrtree/ultrametric.hpp"
#include "support/oracles.hpp"

using namespace corrtree;

namespace {
DistanceMatrix three(double ab, double ac, double bc) {
  DistanceMatrix d{{"A", "B", "C"}, Matrix(3, 3, 0.0)};
  d.d(0, 1) = d.d(1, 0) = ab;
  d.d(0, 2) = d.d(2, 0) = ac;
  d.d(1, 2) = d.d(2, 1) = bc;
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const SpanningTree& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : t.edges) out.emplace_back(e.a, e.b);
  return out;
}
std::vector<double> weights_of(const SpanningTree& t) {
  std::vector<double> out;
  for (const auto& e : t.edges) out.push_back(e.weight);
  return out;
}
}  // namespace

TEST_CASE("subdominant ultrametric is the path maximum") {
  SpanningTree path{{"A", "B", "C"}, {{0, 1, 0.5, 0}, {1, 2, 0.8, 1}}};
  const auto u = subdominant_ultrametric(path);
  CHECK(u.dhat(0, 2) == 0.8);
  CHECK(u.dhat(0, 1) == 0.5);
  CHECK(u.dhat(1, 2) == 0.8);
  for (std::size_t i = 0; i < 3; ++i) CHECK(u.dhat(i, i) == 0.0);

  SpanningTree star{{"C", "L1", "L2", "L3"}, {{0, 1, 0.3, 0}, {0, 2, 0.3, 1}, {0, 3, 0.3, 2}}};
  const auto s = subdominant_ultrametric(star);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(s.dhat(i, j) == (i == j ? 0.0 : 0.3));
}

TEST_CASE("single_linkage hand agglomeration") {
  const auto dg = single_linkage(three(0.2, 0.9, 0.7));
  REQUIRE(dg.merges.size() == 2);
  CHECK(dg.merges[0] == Merge{0, 1, 0.2});
  CHECK(dg.merges[1] == Merge{3, 2, 0.7});

  DistanceMatrix two{{"A", "B"}, Matrix(2, 2, 0.0)};
  two.d(0, 1) = two.d(1, 0) = 0.4;
  CHECK(single_linkage(two).merges == std::vector<Merge>{{0, 1, 0.4}});
  CHECK_THROWS_AS(single_linkage(DistanceMatrix{{"A"}, Matrix(1, 1, 0.0)}), SizeError);
}

TEST_CASE("ultrametric invariants (property)") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const auto d = oracle::random_distances(rng, n);
    const auto t = build_mst(d);
    const auto u = subdominant_ultrametric(t);
    CHECK(oracle::is_ultrametric(u.dhat));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(u.dhat(i, j) <= d.d(i, j));
        CHECK(u.dhat(i, j) == u.dhat(j, i));
      }
    CHECK(u.dhat == oracle::path_max(n, pairs_of(t), weights_of(t)));
    CHECK(u.dhat == serial::subdominant_ultrametric(t).dhat);
  }
}

TEST_CASE("single linkage equals the tree-derived dendrogram (property)") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    auto d = oracle::random_distances(rng, n);
    // Force ties on some trials.
    if (trial % 3 == 0)
      for (auto& v : d.d.data()) v = std::round(v * 4.0) / 4.0 + (v == 0.0 ? 0.0 : 0.25);
    for (std::size_t i = 0; i < n; ++i) d.d(i, i) = 0.0;
    const auto t = build_mst(d);
    const auto dg = single_linkage(d);
    CHECK(dg == dendrogram_from_tree(t));
    const Matrix coph = cophenetic(dg);
    const auto u = subdominant_ultrametric(t);
    for (std::size_t k = 0; k < coph.data().size(); ++k)
      CHECK(std::abs(coph.data()[k] - u.dhat.data()[k]) <= 1e-12);
    // Merge heights are the sorted tree weights.
    auto w = weights_of(t);
    std::sort(w.begin(), w.end());
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(dg.merges[k].height == w[k]);
  }
}

TEST_CASE("subdominance: dhat is the largest ultrametric below d (property)") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    const auto d = oracle::random_distances(rng, n);
    const auto t = build_mst(d);
    const auto dhat = subdominant_ultrametric(t).dhat;

    // Random ultrametrics scaled to sit below d stay below dhat.
    Matrix u = cophenetic(single_linkage(oracle::random_distances(rng, n)));
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) scale = std::min(scale, d.d(i, j) / u(i, j));
    for (auto& v : u.data()) v *= scale * (1.0 - 1e-12);
    CHECK(oracle::is_ultrametric(u, 1e-15));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(u(i, j) <= dhat(i, j) + 1e-12);

    // Raising any single merge of dhat's dendrogram breaks u <= d.
    const auto dg = dendrogram_from_tree(t);
    const std::size_t k = rng() % dg.merges.size();
    const double ceiling = k + 1 < dg.merges.size() ? dg.merges[k + 1].height : 3.0;
    if (!(ceiling > dg.merges[k].height)) continue;
    auto raised = dg;
    raised.merges[k].height += (ceiling - dg.merges[k].height) * (0.01 + 0.99 * unif(rng));
    const Matrix up = cophenetic(raised);
    CHECK(oracle::is_ultrametric(up));
    bool exceeds = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) exceeds |= up(i, j) > d.d(i, j);
    CHECK(exceeds);
  }
}

TEST_CASE("cutting the dendrogram matches tree components") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 15;
    const auto d = oracle::random_distances(rng, n);
    const auto t = build_mst(d);
    const auto dg = dendrogram_from_tree(t);
    const double h = 0.1 + 1.9 * static_cast<double>(rng() % 100) / 100.0;
    UnionFind uf(n);
    for (const auto& e : t.edges)
      if (e.weight <= h) uf.unite(e.a, e.b);
    const auto ids = cut(dg, h);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK((ids[i] == ids[j]) == (uf.find(i) == uf.find(j)));
  }
}

TEST_CASE("dendrogram validation") {
  Dendrogram bad{{"A", "B", "C"}, {{0, 1, 0.5}, {3, 2, 0.4}}};
  CHECK_THROWS_AS(validate(bad), DomainError);
  Dendrogram reuse{{"A", "B", "C"}, {{0, 1, 0.5}, {0, 2, 0.6}}};
  CHECK_THROWS_AS(validate(reuse), DomainError);
  Dendrogram short_dg{{"A", "B", "C"}, {{0, 1, 0.5}}};
  CHECK_THROWS_AS(validate(short_dg), SizeError);
}
