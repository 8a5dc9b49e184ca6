#include "egodiv/reputation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "egodiv/errors.hpp"
#include "egodiv/stats.hpp"

namespace egodiv {

double log_transform(std::uint64_t count) { return std::log10(static_cast<double>(count) + 1.0); }

Eigen::MatrixXd popularity_matrix(std::span<const PopularityRecord> records) {
  Eigen::MatrixXd V(static_cast<Eigen::Index>(records.size()), 3);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    V(row, 0) = log_transform(records[i].upvotes);
    V(row, 1) = log_transform(records[i].thanks);
    V(row, 2) = log_transform(records[i].favorites);
  }
  return V;
}

namespace {

// Multiplicative factor num/den, treating 0/0 as "stay at zero".
inline double ratio(double num, double den) {
  constexpr double tiny = std::numeric_limits<double>::min();
  return den > tiny ? num / den : 0.0;
}

}  // namespace

NmfResult nmf(const Eigen::MatrixXd& V, int rank, double tol, std::size_t max_iter) {
  if (rank < 1) throw InputError("nmf rank must be >= 1");
  if (!(tol > 0.0)) throw InputError("nmf tolerance must be positive");
  if ((V.array() < 0.0).any() || !V.allFinite()) throw InputError("nmf input must be finite and non-negative");

  const Eigen::Index n = V.rows();
  const Eigen::Index m = V.cols();
  const Eigen::Index r = rank;
  NmfResult res;

  if (V.isZero(0.0)) {
    res.W = Eigen::MatrixXd::Zero(n, r);
    res.H = Eigen::MatrixXd::Zero(r, m);
    return res;
  }

  res.H = Eigen::MatrixXd::Ones(r, m);
  // Deterministic spread so higher-rank columns start apart.
  for (Eigen::Index c = 1; c < r; ++c) {
    for (Eigen::Index j = 0; j < m; ++j) res.H(c, j) = 1.0 + 0.5 * static_cast<double>((c + j) % (r + 1));
  }
  res.W = V * res.H.transpose() / static_cast<double>(m);

  double prev_error = (V - res.W * res.H).norm();
  for (std::size_t it = 0; it < max_iter; ++it) {
    const Eigen::MatrixXd w_old = res.W;

    const Eigen::MatrixXd w_num = V * res.H.transpose();
    const Eigen::MatrixXd w_den = res.W * (res.H * res.H.transpose());
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index c = 0; c < r; ++c) res.W(i, c) *= ratio(w_num(i, c), w_den(i, c));
    }

    const Eigen::MatrixXd h_num = res.W.transpose() * V;
    const Eigen::MatrixXd h_den = (res.W.transpose() * res.W) * res.H;
    for (Eigen::Index c = 0; c < r; ++c) {
      for (Eigen::Index j = 0; j < m; ++j) res.H(c, j) *= ratio(h_num(c, j), h_den(c, j));
    }

    const double error = (V - res.W * res.H).norm();
    res.error_history.push_back(error);
    res.iterations = it + 1;

    const double w_norm = res.W.norm();
    const double w_change = w_norm > 0.0 ? (res.W - w_old).norm() / w_norm : 0.0;
    const double improvement = prev_error > 0.0 ? (prev_error - error) / prev_error : 0.0;
    prev_error = error;
    if (improvement < tol && w_change < tol) break;
  }
  res.reconstruction_error = prev_error;
  return res;
}

std::vector<double> reputation_from_matrix(const Eigen::MatrixXd& V) {
  const NmfResult fit = nmf(V, 1);
  std::vector<double> w(fit.W.rows());
  for (Eigen::Index i = 0; i < fit.W.rows(); ++i) w[static_cast<std::size_t>(i)] = fit.W(i, 0);
  auto index = minmax_normalize(w);
  for (double& x : index) x *= 100.0;
  return index;
}

std::vector<double> social_reputation_index(std::span<const PopularityRecord> records) {
  if (records.empty()) throw InputError("social reputation index needs at least one record");
  return reputation_from_matrix(popularity_matrix(records));
}

std::vector<double> ensemble_popularity(std::span<const PopularityRecord> records) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    out.push_back((log_transform(r.upvotes) + log_transform(r.thanks) + log_transform(r.favorites)) / 3.0);
  }
  return out;
}

}  // namespace egodiv
