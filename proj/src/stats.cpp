#include "egodiv/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "egodiv/distributions.hpp"
#include "egodiv/errors.hpp"
#include "egodiv/rng.hpp"

namespace egodiv {

std::vector<double> minmax_normalize(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  if (out.empty()) return out;
  const auto [lo, hi] = std::minmax_element(out.begin(), out.end());
  const double min = *lo;
  const double range = *hi - *lo;
  for (double& x : out) x = range > 0.0 ? (x - min) / range : 0.0;
  return out;
}

// Shifted by the first element so that constant inputs come back exact.
double mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const double pivot = values.front();
  double acc = 0.0;
  for (double x : values) acc += x - pivot;
  return pivot + acc / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double mu = mean(values);
  double acc = 0.0;
  for (double x : values) acc += (x - mu) * (x - mu);
  return acc / static_cast<double>(values.size() - 1);
}

Eigen::MatrixXd add_intercept(const Eigen::MatrixXd& X) {
  Eigen::MatrixXd out(X.rows(), X.cols() + 1);
  out.col(0).setOnes();
  out.rightCols(X.cols()) = X;
  return out;
}

namespace {

double t_for(double coef, double se) {
  if (se > 0.0) return coef / se;
  if (coef == 0.0) return 0.0;
  return coef > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

bool has_constant_column(const Eigen::MatrixXd& X) {
  for (Eigen::Index c = 0; c < X.cols(); ++c) {
    if (X.rows() > 0 && (X.col(c).array() == X(0, c)).all() && X(0, c) != 0.0) return true;
  }
  return false;
}

}  // namespace

RegressionResult ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  if (y.size() != n) throw InputError("ols: response has " + std::to_string(y.size()) + " rows, design has " +
                                      std::to_string(n));
  if (n <= p) throw InputError("ols: need more observations than parameters");
  if (!X.allFinite() || !y.allFinite()) throw InputError("ols: non-finite input");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < p) {
    throw SingularDesignError("design matrix is rank deficient (rank " + std::to_string(qr.rank()) + " of " +
                              std::to_string(p) + " columns)");
  }
  const Eigen::VectorXd beta = qr.solve(y);
  const Eigen::VectorXd resid = y - X * beta;

  const auto dof = static_cast<double>(n - p);
  const double rss = resid.squaredNorm();
  const double sigma2 = rss / dof;

  // (X'X)^-1 = P R^-1 R^-T P' from the pivoted QR.
  const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd R_inv =
      R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::MatrixXd cov_unpivoted = R_inv * R_inv.transpose();
  const Eigen::MatrixXd cov = qr.colsPermutation() * cov_unpivoted * qr.colsPermutation().transpose();

  RegressionResult res;
  res.n_obs = static_cast<std::size_t>(n);
  const double t_crit = student_t_quantile(0.975, dof);
  for (Eigen::Index j = 0; j < p; ++j) {
    const double coef = beta(j);
    const double se = std::sqrt(std::max(0.0, sigma2 * cov(j, j)));
    const double t = t_for(coef, se);
    res.coefficients.push_back(coef);
    res.std_errors.push_back(se);
    res.t_values.push_back(t);
    res.ci95.emplace_back(coef - t_crit * se, coef + t_crit * se);
    res.p_values.push_back(student_t_two_tailed(t, dof));
  }
  res.residuals.assign(resid.data(), resid.data() + resid.size());

  const double centre = has_constant_column(X) ? y.mean() : 0.0;
  const double tss = (y.array() - centre).square().sum();
  res.r_squared = tss > 0.0 ? std::clamp(1.0 - rss / tss, 0.0, 1.0) : 1.0;
  res.adj_r_squared = 1.0 - (1.0 - res.r_squared) * static_cast<double>(n - 1) / dof;
  return res;
}

std::pair<double, double> bootstrap_ci(std::span<const double> values, std::size_t resamples, double level,
                                       std::uint64_t seed, unsigned jobs) {
  if (values.empty()) throw InputError("bootstrap needs at least one value");
  if (resamples == 0) throw InputError("bootstrap needs at least one resample");
  if (!(level > 0.0 && level < 1.0)) throw InputError("bootstrap level must lie in (0, 1)");

  const std::size_t n = values.size();
  std::vector<double> means(resamples);
  auto run = [&](std::size_t begin, std::size_t end) {
    std::vector<double> draw(n);
    for (std::size_t r = begin; r < end; ++r) {
      SplitMix64 rng(derive_seed(seed, r));
      for (std::size_t i = 0; i < n; ++i) draw[i] = values[rng.below(n)];
      means[r] = mean(draw);
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(resamples)));
  if (jobs == 1) {
    run(0, resamples);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (resamples + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(resamples, begin + chunk);
      if (begin < end) workers.emplace_back(run, begin, end);
    }
    for (auto& t : workers) t.join();
  }
  std::sort(means.begin(), means.end());

  // Linear interpolation between order statistics.
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(resamples - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, resamples - 1);
    const double frac = pos - static_cast<double>(lo);
    return means[lo] + frac * (means[hi] - means[lo]);
  };
  const double alpha = 1.0 - level;
  return {quantile(alpha / 2.0), quantile(1.0 - alpha / 2.0)};
}

AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) throw InputError("anova needs at least two groups");
  std::size_t total = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) throw InputError("anova group " + std::to_string(g) + " is empty");
    total += groups[g].size();
  }
  if (total <= groups.size()) throw InputError("anova needs more observations than groups");

  std::vector<double> all;
  all.reserve(total);
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  const double grand = mean(all);

  double ssb = 0.0;
  double ssw = 0.0;
  for (const auto& g : groups) {
    const double mu = mean(g);
    ssb += static_cast<double>(g.size()) * (mu - grand) * (mu - grand);
    for (double x : g) ssw += (x - mu) * (x - mu);
  }

  AnovaResult res;
  res.df1 = groups.size() - 1;
  res.df2 = total - groups.size();
  if (ssb == 0.0) {
    res.f = 0.0;
    res.p = 1.0;
    return res;
  }
  if (ssw == 0.0) {
    res.f = std::numeric_limits<double>::infinity();
    res.p = 0.0;
    return res;
  }
  res.f = (ssb / static_cast<double>(res.df1)) / (ssw / static_cast<double>(res.df2));
  res.p = f_upper_tail(res.f, static_cast<double>(res.df1), static_cast<double>(res.df2));
  return res;
}

TTestResult paired_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InputError("paired t-test: lengths differ (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
  if (a.size() < 2) throw InputError("paired t-test needs at least two pairs");
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];

  TTestResult res;
  res.df = diff.size() - 1;
  const double mu = mean(diff);
  const double se = std::sqrt(sample_variance(diff) / static_cast<double>(diff.size()));
  if (se == 0.0) {
    if (mu == 0.0) return res;
    res.zero_variance = true;
    res.t = mu > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    res.p = 0.0;
    return res;
  }
  res.t = mu / se;
  res.p = student_t_two_tailed(res.t, static_cast<double>(res.df));
  return res;
}

double standardized_mean_difference(std::span<const double> treated, std::span<const double> control) {
  const double diff = std::fabs(mean(treated) - mean(control));
  const double pooled = std::sqrt((sample_variance(treated) + sample_variance(control)) / 2.0);
  if (pooled == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / pooled;
}

}  // namespace egodiv
