#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "corrtree/error.hpp"
#include "corrtree/transform.hpp"

using namespace corrtree;

namespace {
TimeSeriesPanel column_panel(const std::vector<double>& a, const std::vector<double>& b) {
  TimeSeriesPanel p;
  p.assets = {"A", "B"};
  p.values = Matrix(a.size(), 2);
  for (std::size_t t = 0; t < a.size(); ++t) {
    p.timestamps.push_back(std::to_string(t));
    p.values(t, 0) = a[t];
    p.values(t, 1) = b[t];
  }
  return p;
}

TimeSeriesPanel row_panel(const std::vector<std::vector<double>>& rows) {
  TimeSeriesPanel p;
  for (std::size_t i = 0; i < rows.front().size(); ++i) p.assets.push_back("X" + std::to_string(i));
  p.values = Matrix(rows.size(), rows.front().size());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    p.timestamps.push_back(std::to_string(t));
    for (std::size_t i = 0; i < rows[t].size(); ++i) p.values(t, i) = rows[t][i];
  }
  return p;
}
}  // namespace

TEST_CASE("log_returns") {
  const double e = std::numbers::e;
  auto y = log_returns(column_panel({1, e, e * e}, {5, 5, 5}));
  CHECK(y.n_times() == 2);
  CHECK(y.kind == SignalKind::log_return);
  CHECK(y.observations(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(y.observations(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(y.observations(0, 1) == 0.0);
  CHECK(y.observations(1, 1) == 0.0);
  CHECK(y.timestamps == std::vector<std::string>{"1", "2"});

  auto z = log_returns(column_panel({100, 110}, {1, 1}));
  // ln(110) - ln(100), evaluated independently.
  CHECK(std::abs(z.observations(0, 0) - 0.09531017980432477) < 1e-15);
}

TEST_CASE("log_returns propagates gaps and rejects non-positive values") {
  auto y = log_returns(column_panel({1, kMissing, 4, 8}, {1, 2, 3, 4}));
  CHECK(is_missing(y.observations(0, 0)));
  CHECK(is_missing(y.observations(1, 0)));
  CHECK(y.observations(2, 0) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(log_returns(column_panel({1, 0, 2}, {1, 2, 3})), DomainError);
  CHECK_THROWS_WITH_AS(log_returns(column_panel({1, 2, 3}, {1, -2, 3})), doctest::Contains("'B'"),
                       DomainError);
}

TEST_CASE("log_returns is invariant to a global scale (property)") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.5, 200.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(10), b(10);
    for (auto& v : a) v = unif(rng);
    for (auto& v : b) v = unif(rng);
    const double c = unif(rng);
    std::vector<double> ca = a, cb = b;
    for (auto& v : ca) v *= c;
    for (auto& v : cb) v *= c;
    const auto y1 = log_returns(column_panel(a, b)), y2 = log_returns(column_panel(ca, cb));
    for (std::size_t k = 0; k < y1.observations.data().size(); ++k)
      CHECK(std::abs(y1.observations.data()[k] - y2.observations.data()[k]) < 1e-12);
  }
}

TEST_CASE("rank_signal uses 1 for the largest and mean ranks for ties") {
  auto r = rank_signal(row_panel({{10, 30, 20}}));
  CHECK(r.observations(0, 0) == 3.0);
  CHECK(r.observations(0, 1) == 1.0);
  CHECK(r.observations(0, 2) == 2.0);

  auto t = rank_signal(row_panel({{7, 7, 1}}));
  CHECK(t.observations(0, 0) == 1.5);
  CHECK(t.observations(0, 1) == 1.5);
  CHECK(t.observations(0, 2) == 3.0);

  auto s = rank_signal(row_panel({{1, 2}, {2, 1}}));
  CHECK(s.observations(0, 0) == 2.0);
  CHECK(s.observations(0, 1) == 1.0);
  CHECK(s.observations(1, 0) == 1.0);
  CHECK(s.observations(1, 1) == 2.0);

  CHECK_THROWS_AS(rank_signal(row_panel({{1, kMissing}})), DomainError);
}

TEST_CASE("rank rows sum to n(n+1)/2 and are permutations without ties (property)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<std::vector<double>> rows(4, std::vector<double>(n));
    const bool ties = trial % 2 == 0;
    for (auto& row : rows)
      for (auto& v : row) v = ties ? static_cast<double>(rng() % 3) : std::ldexp(static_cast<double>(rng() >> 11), -53);
    const auto r = rank_signal(row_panel(rows));
    for (std::size_t t = 0; t < rows.size(); ++t) {
      double sum = 0.0;
      std::vector<double> vals;
      for (std::size_t i = 0; i < n; ++i) {
        sum += r.observations(t, i);
        vals.push_back(r.observations(t, i));
      }
      CHECK(sum == static_cast<double>(n * (n + 1)) / 2.0);
      if (!ties) {
        std::sort(vals.begin(), vals.end());
        for (std::size_t i = 0; i < n; ++i) CHECK(vals[i] == static_cast<double>(i + 1));
      }
    }
  }
}

TEST_CASE("zscore uses the population standard deviation") {
  auto z = zscore(column_panel({1, 2, 3}, {0, 1, 5}));
  CHECK(std::abs(z.observations(0, 0) + 1.224744871391589) < 1e-12);
  CHECK(std::abs(z.observations(1, 0)) < 1e-15);
  CHECK(std::abs(z.observations(2, 0) - 1.224744871391589) < 1e-12);

  auto fixed = zscore(column_panel({-1, 1}, {1, -1}));
  CHECK(fixed.observations(0, 0) == doctest::Approx(-1.0));
  CHECK(fixed.observations(1, 0) == doctest::Approx(1.0));

  CHECK_THROWS_WITH_AS(zscore(column_panel({4, 4, 4}, {1, 2, 3})), doctest::Contains("'A'"),
                       DegenerateAssetError);
}

TEST_CASE("zscore columns have mean 0 and sigma 1 (property)") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal(3.0, 7.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(5 + rng() % 50), b(a.size());
    for (auto& v : a) v = normal(rng);
    for (auto& v : b) v = normal(rng);
    const auto z = zscore(column_panel(a, b));
    for (std::size_t i = 0; i < 2; ++i) {
      double mean = 0.0, ss = 0.0;
      for (std::size_t t = 0; t < a.size(); ++t) mean += z.observations(t, i);
      mean /= static_cast<double>(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) ss += std::pow(z.observations(t, i) - mean, 2);
      CHECK(std::abs(mean) < 1e-12);
      CHECK(std::abs(std::sqrt(ss / static_cast<double>(a.size())) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("rebase") {
  TimeSeriesPanel p{{"EUR", "GBP"}, {"0"}, Matrix(1, 2)};
  p.values(0, 0) = 2.0;
  p.values(0, 1) = 4.0;
  const auto q = rebase(p, "EUR", "USD");
  CHECK(q.assets == std::vector<std::string>{"GBP", "USD"});
  CHECK(q.values(0, 0) == 2.0);
  CHECK(q.values(0, 1) == 0.5);

  CHECK(rebase(p, "USD", "USD") == p);

  TimeSeriesPanel z = p;
  z.values(0, 0) = 0.0;
  CHECK_THROWS_AS(rebase(z, "EUR", "USD"), DomainError);
  CHECK_THROWS_AS(rebase(p, "JPY", "USD"), LookupError);
  CHECK_THROWS_AS(rebase(p, "EUR", "GBP"), SchemaError);
}

TEST_CASE("rebase there and back recovers the quotes (property)") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unif(0.01, 150.0);
  for (int trial = 0; trial < 100; ++trial) {
    TimeSeriesPanel p{{"AUD", "CHF", "EUR", "JPY"}, {}, Matrix(6, 4)};
    for (std::size_t t = 0; t < 6; ++t) p.timestamps.push_back(std::to_string(t));
    for (auto& v : p.values.data()) v = unif(rng);
    const std::string base = p.assets[rng() % 4];
    const auto there = rebase(p, base, "USD");
    const auto back = rebase(there, "USD", base);
    for (const auto& a : p.assets) {
      const auto i = p.index_of(a), j = back.index_of(a);
      for (std::size_t t = 0; t < 6; ++t)
        CHECK(std::abs(back.values(t, j) - p.values(t, i)) <= 1e-12 * p.values(t, i));
    }
  }
}

TEST_CASE("signal kind names") {
  CHECK(parse_signal_kind("log-return") == SignalKind::log_return);
  CHECK(parse_signal_kind("zscore") == SignalKind::zscore);
  CHECK_THROWS_AS(parse_signal_kind("returns"), SpecError);
}
