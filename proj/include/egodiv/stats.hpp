#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "egodiv/graph.hpp"

namespace egodiv {

/// (x - min) / (max - min); a constant input maps to all zeros.
std::vector<double> minmax_normalize(std::span<const double> values);

double mean(std::span<const double> values);
/// Sample variance (n - 1 denominator); 0 for fewer than two values.
double sample_variance(std::span<const double> values);

struct RegressionResult {
  std::vector<double> coefficients;  // intercept first when the design has one
  std::vector<double> std_errors;
  std::vector<double> t_values;
  std::vector<std::pair<double, double>> ci95;
  std::vector<double> p_values;
  std::vector<double> residuals;
  double r_squared = 0.0;
  double adj_r_squared = 0.0;
  std::size_t n_obs = 0;
};

/// Prepends a column of ones.
Eigen::MatrixXd add_intercept(const Eigen::MatrixXd& X);

/// Ordinary least squares of y on the columns of X (X already carries any
/// intercept column). Inference uses the t distribution with n - p degrees of
/// freedom. Throws SingularDesignError when X lacks full column rank and
/// InputError when n <= p or sizes disagree.
RegressionResult ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X);

/// Percentile interval of resampled means. Resample r draws from its own
/// stream derived from (seed, r), so the result does not depend on `jobs`.
std::pair<double, double> bootstrap_ci(std::span<const double> values, std::size_t resamples = 10000,
                                       double level = 0.95, std::uint64_t seed = 0, unsigned jobs = 1);

struct AnovaResult {
  double f = 0.0;
  double p = 1.0;
  std::size_t df1 = 0;
  std::size_t df2 = 0;
};

/// One-way ANOVA. Throws InputError with fewer than two groups, an empty
/// group, or no within-group degrees of freedom.
AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups);

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
  std::size_t df = 0;
  /// Differences have zero variance but a non-zero mean: t diverges.
  bool zero_variance = false;
};

/// Paired t-test on a - b. Throws InputError on length mismatch or n < 2.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

/// |mean_t - mean_c| / sqrt((var_t + var_c) / 2).
double standardized_mean_difference(std::span<const double> treated, std::span<const double> control);

struct LogisticFit {
  Eigen::VectorXd coefficients;
  std::size_t iterations = 0;
};

/// Logistic regression by iteratively reweighted least squares. X carries
/// its own intercept column. Throws ConvergenceError (with the iteration
/// count) when the update does not settle within max_iter.
LogisticFit logistic_regression(const Eigen::VectorXd& y, const Eigen::MatrixXd& X, std::size_t max_iter = 100,
                                double tol = 1e-8);

struct MatchOptions {
  std::optional<double> caliper;  // max propensity distance; none by default
  std::size_t max_iter = 100;
  double tol = 1e-8;
};

struct MatchResult {
  std::vector<std::pair<NodeId, NodeId>> pairs;         // (treated, control)
  std::vector<std::pair<std::size_t, std::size_t>> rows;  // same pairs as row indices
  std::map<std::string, double> smd_per_covariate;       // on the matched sample
  std::vector<double> propensity;                        // per input row
  std::size_t n_matched = 0;
};

/// Greedy 1:1 nearest-neighbour matching on scores without replacement.
/// Treated rows go in descending score order (equal scores ordered by a key
/// drawn from `seed`); each takes the closest unused control, the lower row
/// index on equal distance. Pairs farther apart than `caliper` are skipped.
/// Returns (treated row, control row) in matching order.
std::vector<std::pair<std::size_t, std::size_t>> greedy_score_match(std::span<const double> scores,
                                                                     const std::vector<bool>& treated,
                                                                     std::uint64_t seed,
                                                                     std::optional<double> caliper = std::nullopt);

/// Propensity-score matching: logistic propensity on `features` (no
/// intercept column; one is added), then greedy 1:1 nearest-neighbour
/// matching on the score without replacement. Treated units are processed in
/// descending score order; equal scores are ordered by a key drawn from
/// `seed`. Equidistant controls resolve to the lower row index.
///
/// Throws InfeasibleError if either group is empty, InputError on shape
/// mismatch or non-finite features, ConvergenceError if the fit fails.
MatchResult propensity_match(const Eigen::MatrixXd& features, const std::vector<bool>& treated,
                             std::span<const NodeId> ids, std::span<const std::string> covariate_names,
                             std::uint64_t seed, const MatchOptions& options = {});

}  // namespace egodiv
