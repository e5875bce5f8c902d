#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "corrtree/dynamics.hpp"
#include "corrtree/error.hpp"
#include "corrtree/serial.hpp"
#include "corrtree/synthgen.hpp"
#include "support/oracles.hpp"

using namespace corrtree;

namespace {
std::set<std::string> members_of(const ReturnsMatrix& y, const std::string& group) {
  std::set<std::string> out;
  for (const auto& a : y.assets)
    if (a.rfind(group + "_", 0) == 0) out.insert(a);
  return out;
}

// Concatenates rows of a and b (same assets).
ReturnsMatrix stack(const ReturnsMatrix& a, const ReturnsMatrix& b) {
  ReturnsMatrix out = a;
  out.observations = Matrix(a.n_times() + b.n_times(), a.n_assets());
  for (std::size_t t = 0; t < a.n_times(); ++t)
    for (std::size_t i = 0; i < a.n_assets(); ++i) out.observations(t, i) = a.observations(t, i);
  for (std::size_t t = 0; t < b.n_times(); ++t)
    for (std::size_t i = 0; i < a.n_assets(); ++i)
      out.observations(a.n_times() + t, i) = b.observations(t, i);
  out.timestamps.clear();
  for (std::size_t t = 0; t < out.n_times(); ++t) out.timestamps.push_back(std::to_string(t));
  return out;
}

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }
double variance(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}
}  // namespace

TEST_CASE("window arithmetic") {
  CHECK(make_windows(10, {5, 1}).size() == 6);
  CHECK(make_windows(10, {5, 1}).back() == Window{5, 10});
  CHECK(make_windows(10, {10, 1}).size() == 1);
  CHECK(make_windows(11, {5, 3}).size() == 3);
  CHECK_THROWS_AS(make_windows(10, {2, 1}), SpecError);
  CHECK_THROWS_AS(make_windows(10, {5, 0}), SpecError);
  CHECK_THROWS_AS(make_windows(10, {11, 1}), SpecError);
}

TEST_CASE("a single full-length window reproduces the static pipeline") {
  std::mt19937_64 rng(83);
  const auto y = oracle::random_returns(rng, 8, 50);
  const auto seq = rolling_trees(y, {50, 1});
  REQUIRE(seq.trees.size() == 1);
  CHECK(seq.trees[0] == static_tree(y));
  // step = T - width + 1 also leaves one window.
  const auto seq2 = rolling_trees(y, {30, 21});
  REQUIRE(seq2.trees.size() == 1);
  CHECK(seq2.trees[0] == static_tree(y.slice(0, 30)));
}

TEST_CASE("rolling_trees matches the serial reference") {
  std::mt19937_64 rng(89);
  const auto y = oracle::random_returns(rng, 10, 120);
  const auto a = rolling_trees(y, {40, 7}), b = serial::rolling_trees(y, {40, 7});
  REQUIRE(a.trees.size() == b.trees.size());
  CHECK(a.windows == b.windows);
  for (std::size_t k = 0; k < a.trees.size(); ++k) CHECK(edge_set(a.trees[k]) == edge_set(b.trees[k]));
}

TEST_CASE("rolling_trees propagates insufficient data") {
  std::mt19937_64 rng(97);
  const auto y = oracle::random_returns(rng, 4, 20);
  CHECK_THROWS_AS(rolling_trees(y, {5, 5}, 6), InsufficientDataError);
}

TEST_CASE("edge_survival") {
  SpanningTree a{{"A", "B", "C", "D", "E"}, {{0, 1, 1, 0}, {1, 2, 1, 1}, {2, 3, 1, 2}, {3, 4, 1, 3}}};
  CHECK(edge_survival(a, a) == 1.0);
  SpanningTree half{{"A", "B", "C", "D", "E"}, {{0, 1, 1, 0}, {1, 2, 1, 1}, {0, 3, 1, 2}, {0, 4, 1, 3}}};
  CHECK(edge_survival(a, half) == 0.5);
  CHECK(edge_survival(half, a) == 0.5);
  SpanningTree disjoint{{"A", "B", "C", "D", "E"}, {{0, 2, 1, 0}, {0, 3, 1, 1}, {0, 4, 1, 2}, {1, 3, 1, 3}}};
  CHECK(edge_survival(a, disjoint) == 0.0);
  SpanningTree other{{"A", "B", "C", "D", "X"}, a.edges};
  CHECK_THROWS_AS(edge_survival(a, other), ComparisonError);

  // Same asset set in another order.
  SpanningTree permuted{{"E", "D", "C", "B", "A"}, {{3, 4, 1, 0}, {2, 3, 1, 1}, {1, 2, 1, 2}, {0, 1, 1, 3}}};
  CHECK(edge_survival(a, permuted) == 1.0);
}

TEST_CASE("edge_survival is symmetric (property)") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const auto t1 = build_mst(oracle::random_distances(rng, n));
    const auto t2 = build_mst(oracle::random_distances(rng, n));
    CHECK(edge_survival(t1, t2) == edge_survival(t2, t1));
  }
}

TEST_CASE("split_compare") {
  std::mt19937_64 rng(103);
  const auto half = oracle::random_returns(rng, 6, 30);
  const auto r = split_compare(stack(half, half), 30);
  CHECK(r.survival == 1.0);
  CHECK(r.before == r.after);

  const auto ten = oracle::random_returns(rng, 4, 10);
  CHECK_THROWS_AS(split_compare(ten, 2), SizeError);
  CHECK_THROWS_AS(split_compare(ten, 8), SizeError);
  CHECK_NOTHROW(split_compare(ten, 3));
}

TEST_CASE("stationary factor panel keeps groups connected across windows") {
  FactorModelSpec spec{{{"G1", 10}, {"G2", 10}}, 0.8, 0.6, 0.0, 1000, 5};
  const auto y = generate(spec);
  const auto seq = rolling_trees(y, {250, 25});
  CHECK(seq.trees.size() == 31);
  std::size_t good = 0;
  for (const auto& t : seq.trees)
    good += oracle::connected_subtree(t, members_of(y, "G1")) && oracle::connected_subtree(t, members_of(y, "G2"));
  CHECK(static_cast<double>(good) >= 0.95 * static_cast<double>(seq.trees.size()));
}

TEST_CASE("reshuffled factor membership lowers survival across the split") {
  std::vector<double> stationary, switched;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FactorModelSpec spec{{{"G1", 6}, {"G2", 6}, {"G3", 6}}, 0.8, 0.6, 0.0, 150, seed};
    const auto first = generate(spec);
    spec.seed = seed + 1000;
    const auto second = generate(spec);
    stationary.push_back(split_compare(stack(first, second), 150).survival);

    // After the split, asset k takes the series of asset (k + 3) mod n, so
    // every group now mixes members of two old groups.
    auto shuffled = second;
    const std::size_t n = second.n_assets();
    for (std::size_t t = 0; t < second.n_times(); ++t)
      for (std::size_t k = 0; k < n; ++k) shuffled.observations(t, k) = second.observations(t, (k + 3) % n);
    switched.push_back(split_compare(stack(first, shuffled), 150).survival);
  }
  const double gap = mean(stationary) - mean(switched);
  const double se = std::sqrt(variance(stationary) / 100.0 + variance(switched) / 100.0);
  MESSAGE("stationary " << mean(stationary) << " switched " << mean(switched) << " t=" << gap / se);
  CHECK(gap > 0.0);
  CHECK(gap / se > 5.0);
}

TEST_CASE("overlapping windows share more edges than disjoint ones") {
  FactorModelSpec spec{{{"G1", 6}, {"G2", 6}}, 0.8, 0.6, 0.0, 2000, 17};
  const auto y = generate(spec);
  auto avg = [](const TreeSequence& seq) {
    const auto s = survival_series(seq);
    return std::accumulate(s.begin() + 1, s.end(), 0.0) / static_cast<double>(s.size() - 1);
  };
  const double overlapping = avg(rolling_trees(y, {200, 20}));
  const double disjoint = avg(rolling_trees(y, {200, 200}));
  MESSAGE("overlapping " << overlapping << " disjoint " << disjoint);
  CHECK(overlapping > disjoint);
}

TEST_CASE("survival series") {
  std::mt19937_64 rng(107);
  const auto y = oracle::random_returns(rng, 5, 40);
  const auto seq = rolling_trees(y, {20, 10});
  const auto s = survival_series(seq);
  REQUIRE(s.size() == 3);
  CHECK(std::isnan(s[0]));
  CHECK(s[1] == edge_survival(seq.trees[0], seq.trees[1]));
}
