#include <random>

#include "doctest.h"
#include "egodiv/errors.hpp"
#include "egodiv/stats.hpp"
#include "oracles.hpp"

using namespace egodiv;

namespace {

double total_distance(const std::vector<std::pair<std::size_t, std::size_t>>& rows, const std::vector<double>& s) {
  double d = 0.0;
  for (const auto& [t, c] : rows) d += std::abs(s[t] - s[c]);
  return d;
}

// Plain loop version of the greedy rule for distinct scores.
std::vector<std::pair<std::size_t, std::size_t>> naive_greedy(const std::vector<double>& s,
                                                               const std::vector<bool>& treated) {
  std::vector<std::size_t> ts;
  std::vector<bool> used(s.size(), false);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (treated[i]) ts.push_back(i);
  std::sort(ts.begin(), ts.end(), [&](auto a, auto b) { return s[a] > s[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t : ts) {
    std::size_t best = s.size();
    for (std::size_t c = 0; c < s.size(); ++c) {
      if (treated[c] || used[c]) continue;
      if (best == s.size() || std::abs(s[c] - s[t]) < std::abs(s[best] - s[t])) best = c;
    }
    if (best == s.size()) break;
    used[best] = true;
    out.emplace_back(t, best);
  }
  return out;
}

}  // namespace

TEST_CASE("greedy agrees with a plain loop on distinct scores") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 30;
    std::vector<double> s(n);
    std::vector<bool> treated(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = u(rng);
      treated[i] = u(rng) < 0.4;
    }
    REQUIRE(greedy_score_match(s, treated, 1) == naive_greedy(s, treated));
  }
}

TEST_CASE("single treated unit matches the exhaustive optimum") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<double> s(n);
    for (auto& x : s) x = u(rng);
    std::vector<bool> treated(n, false);
    treated[trial % n] = true;
    const auto rows = greedy_score_match(s, treated, 0);
    REQUIRE(rows.size() == 1);
    REQUIRE(total_distance(rows, s) == doctest::Approx(oracle::best_assignment({s[trial % n]}, [&] {
                                          std::vector<double> c;
                                          for (std::size_t i = 0; i < n; ++i)
                                            if (!treated[i]) c.push_back(s[i]);
                                          return c;
                                        }())));
  }
}

TEST_CASE("greedy never beats the exhaustive optimum on tiny instances") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<double> s(n);
    std::vector<bool> treated(n, false);
    for (auto& x : s) x = u(rng);
    const std::size_t nt = 1 + trial % (n / 2);
    for (std::size_t i = 0; i < nt; ++i) treated[i] = true;
    std::vector<double> ts, cs;
    for (std::size_t i = 0; i < n; ++i) (treated[i] ? ts : cs).push_back(s[i]);
    const auto rows = greedy_score_match(s, treated, 0);
    REQUIRE(rows.size() == nt);
    REQUIRE(total_distance(rows, s) >= oracle::best_assignment(ts, cs) - 1e-12);
  }
}

TEST_CASE("greedy can differ from the exhaustive optimum") {
  // Treated 0.5 takes control 0.46 first, leaving 0.45 with 0.9.
  const std::vector<double> s{0.5, 0.45, 0.46, 0.9};
  const std::vector<bool> treated{true, true, false, false};
  const auto rows = greedy_score_match(s, treated, 0);
  CHECK(rows == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 3}});
  CHECK(total_distance(rows, s) == doctest::Approx(0.49));
  CHECK(oracle::best_assignment({0.5, 0.45}, {0.46, 0.9}) == doctest::Approx(0.41));
}

TEST_CASE("equidistant controls resolve to the lower row") {
  const std::vector<double> s{0.5, 0.75, 0.25};
  const std::vector<bool> treated{true, false, false};
  CHECK(greedy_score_match(s, treated, 0) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  const std::vector<double> s2{0.5, 0.25, 0.75};
  CHECK(greedy_score_match(s2, treated, 0) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
}

TEST_CASE("caliper drops distant pairs") {
  const std::vector<double> s{0.9, 0.1, 0.85};
  const std::vector<bool> treated{true, false, true};
  CHECK(greedy_score_match(s, treated, 0, 0.2) == std::vector<std::pair<std::size_t, std::size_t>>{});
  CHECK(greedy_score_match(s, treated, 0).size() == 1);
}

TEST_CASE("identical groups balance perfectly") {
  Eigen::MatrixXd f(6, 2);
  f << 1, 5, 2, 3, 4, 1, 1, 5, 2, 3, 4, 1;
  const std::vector<bool> treated{true, true, true, false, false, false};
  const std::vector<NodeId> ids{10, 11, 12, 20, 21, 22};
  const std::vector<std::string> names{"a", "b"};
  const auto res = propensity_match(f, treated, ids, names, 9);
  CHECK(res.n_matched == 3);
  CHECK(res.smd_per_covariate.at("a") == doctest::Approx(0.0));
  CHECK(res.smd_per_covariate.at("b") == doctest::Approx(0.0));
  std::set<NodeId> seen;
  for (const auto& [t, c] : res.pairs) {
    CHECK(seen.insert(t).second);
    CHECK(seen.insert(c).second);
  }
}

TEST_CASE("matching reduces imbalance on confounded data") {
  std::mt19937_64 rng(34);
  std::normal_distribution<double> z;
  const int n = 3000;
  Eigen::MatrixXd f(n, 2);
  std::vector<bool> treated(n);
  std::vector<NodeId> ids(n);
  for (int i = 0; i < n; ++i) {
    f(i, 0) = z(rng);
    f(i, 1) = z(rng);
    const double p = 1.0 / (1.0 + std::exp(-(-1.0 + 0.8 * f(i, 0) - 0.4 * f(i, 1))));
    treated[i] = std::uniform_real_distribution<double>()(rng) < p;
    ids[i] = static_cast<NodeId>(i);
  }
  const std::vector<std::string> names{"x0", "x1"};
  const auto res = propensity_match(f, treated, ids, names, 1);
  const auto nt = static_cast<std::size_t>(std::count(treated.begin(), treated.end(), true));
  CHECK(res.n_matched <= std::min(nt, n - nt));
  for (Eigen::Index c = 0; c < 2; ++c) {
    std::vector<double> tv, cv;
    for (int i = 0; i < n; ++i) (treated[i] ? tv : cv).push_back(f(i, c));
    CHECK(res.smd_per_covariate.at(names[c]) < standardized_mean_difference(tv, cv));
  }
  MatchOptions tight;
  tight.caliper = 0.01;
  const auto calipered = propensity_match(f, treated, ids, names, 1, tight);
  CHECK(calipered.n_matched < res.n_matched);
  for (const auto& [name, smd] : calipered.smd_per_covariate) CHECK(smd < 0.1);
  CHECK(propensity_match(f, treated, ids, names, 1).pairs == res.pairs);
}

TEST_CASE("matching input errors") {
  Eigen::MatrixXd f(3, 1);
  f << 1, 2, 3;
  const std::vector<NodeId> ids{1, 2, 3};
  const std::vector<std::string> names{"x"};
  CHECK_THROWS_AS(propensity_match(f, {true, true, true}, ids, names, 0), InfeasibleError);
  CHECK_THROWS_AS(propensity_match(f, {false, false, false}, ids, names, 0), InfeasibleError);
  CHECK_THROWS_AS(propensity_match(f, {true, false}, ids, names, 0), InputError);
  f(1, 0) = NAN;
  CHECK_THROWS_AS(propensity_match(f, {true, false, false}, ids, names, 0), InputError);
}

TEST_CASE("logistic fit reports non-convergence") {
  // Perfect separation drives the coefficients to infinity.
  Eigen::MatrixXd X(4, 2);
  X << 1, -2, 1, -1, 1, 1, 1, 2;
  Eigen::VectorXd y(4);
  y << 0, 0, 1, 1;
  try {
    logistic_regression(y, X, 25);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations() <= 25);
  }
}

TEST_CASE("logistic fit matches known coefficients") {
  std::mt19937_64 rng(35);
  std::normal_distribution<double> z;
  const int n = 20000;
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = z(rng);
    const double p = 1.0 / (1.0 + std::exp(-(0.5 - 1.2 * X(i, 1))));
    y(i) = std::uniform_real_distribution<double>()(rng) < p ? 1.0 : 0.0;
  }
  const auto fit = logistic_regression(y, X);
  CHECK(fit.coefficients(0) == doctest::Approx(0.5).epsilon(0.1));
  CHECK(fit.coefficients(1) == doctest::Approx(-1.2).epsilon(0.1));
}
