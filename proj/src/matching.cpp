#include <algorithm>
#include <cmath>
#include <set>

#include "egodiv/errors.hpp"
#include "egodiv/rng.hpp"
#include "egodiv/stats.hpp"

namespace egodiv {

LogisticFit logistic_regression(const Eigen::VectorXd& y, const Eigen::MatrixXd& X, std::size_t max_iter,
                                double tol) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  if (y.size() != n) throw InputError("logistic regression: response and design sizes differ");

  LogisticFit fit;
  fit.coefficients = Eigen::VectorXd::Zero(p);
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const Eigen::VectorXd eta = X * fit.coefficients;
    Eigen::VectorXd mu(n);
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      mu(i) = 1.0 / (1.0 + std::exp(-eta(i)));
      w(i) = std::max(mu(i) * (1.0 - mu(i)), 1e-12);
    }
    const Eigen::MatrixXd info = X.transpose() * w.asDiagonal() * X;
    const Eigen::VectorXd score = X.transpose() * (y - mu);
    Eigen::LDLT<Eigen::MatrixXd> solver(info);
    if (solver.info() != Eigen::Success) throw ConvergenceError("logistic regression: singular information matrix", it);
    const Eigen::VectorXd step = solver.solve(score);
    if (!step.allFinite()) throw ConvergenceError("logistic regression diverged", it);
    fit.coefficients += step;
    fit.iterations = it;
    if (step.cwiseAbs().maxCoeff() < tol) return fit;
  }
  throw ConvergenceError("logistic regression did not converge", max_iter);
}

std::vector<std::pair<std::size_t, std::size_t>> greedy_score_match(std::span<const double> scores,
                                                                     const std::vector<bool>& treated,
                                                                     std::uint64_t seed, std::optional<double> caliper) {
  const std::size_t n = scores.size();
  if (treated.size() != n) throw InputError("greedy match: row counts disagree");
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> tie_key(n);
  for (auto& k : tie_key) k = rng.next();

  std::vector<std::size_t> order;
  std::set<std::pair<double, std::size_t>> controls;
  for (std::size_t i = 0; i < n; ++i) {
    if (treated[i]) {
      order.push_back(i);
    } else {
      controls.emplace(scores[i], i);
    }
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return tie_key[a] < tie_key[b];
  });

  for (std::size_t t : order) {
    if (controls.empty()) break;
    const double score = scores[t];
    auto above = controls.lower_bound({score, 0});
    auto best = controls.end();
    double best_dist = 0.0;
    auto offer = [&](std::set<std::pair<double, std::size_t>>::iterator it) {
      const double d = std::fabs(it->first - score);
      if (best == controls.end() || d < best_dist || (d == best_dist && it->second < best->second)) {
        best = it;
        best_dist = d;
      }
    };
    // Candidates: the run of equal scores at lower_bound, and the nearest below.
    for (auto it = above; it != controls.end() && it->first == above->first; ++it) offer(it);
    if (above != controls.begin()) {
      auto below = std::prev(above);
      const double below_score = below->first;
      for (auto it = below;; --it) {
        if (it->first != below_score) break;
        offer(it);
        if (it == controls.begin()) break;
      }
    }
    if (caliper && best_dist > *caliper) continue;
    rows.emplace_back(t, best->second);
    controls.erase(best);
  }
  return rows;
}

MatchResult propensity_match(const Eigen::MatrixXd& features, const std::vector<bool>& treated,
                             std::span<const NodeId> ids, std::span<const std::string> covariate_names,
                             std::uint64_t seed, const MatchOptions& options) {
  const auto n = static_cast<std::size_t>(features.rows());
  if (treated.size() != n || ids.size() != n) throw InputError("propensity match: row counts disagree");
  if (covariate_names.size() != static_cast<std::size_t>(features.cols())) {
    throw InputError("propensity match: covariate names do not match feature columns");
  }
  if (!features.allFinite()) throw InputError("propensity match: features must be finite");
  const auto n_treated = static_cast<std::size_t>(std::count(treated.begin(), treated.end(), true));
  if (n_treated == 0) throw InfeasibleError("no treated units");
  if (n_treated == n) throw InfeasibleError("no control units");

  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) y(static_cast<Eigen::Index>(i)) = treated[i] ? 1.0 : 0.0;
  const Eigen::MatrixXd X = add_intercept(features);
  const LogisticFit fit = logistic_regression(y, X, options.max_iter, options.tol);
  const Eigen::VectorXd eta = X * fit.coefficients;

  MatchResult res;
  res.propensity.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.propensity[i] = 1.0 / (1.0 + std::exp(-eta(static_cast<Eigen::Index>(i))));

  res.rows = greedy_score_match(res.propensity, treated, seed, options.caliper);
  for (const auto& [t, c] : res.rows) res.pairs.emplace_back(ids[t], ids[c]);
  res.n_matched = res.rows.size();

  for (Eigen::Index c = 0; c < features.cols(); ++c) {
    std::vector<double> tv;
    std::vector<double> cv;
    for (const auto& [t, u] : res.rows) {
      tv.push_back(features(static_cast<Eigen::Index>(t), c));
      cv.push_back(features(static_cast<Eigen::Index>(u), c));
    }
    res.smd_per_covariate[covariate_names[static_cast<std::size_t>(c)]] =
        res.rows.empty() ? 0.0 : standardized_mean_difference(tv, cv);
  }
  return res;
}

}  // namespace egodiv
