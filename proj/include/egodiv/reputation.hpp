#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "egodiv/graph.hpp"

namespace egodiv {

struct PopularityRecord {
  NodeId user = 0;
  std::uint64_t upvotes = 0;
  std::uint64_t thanks = 0;
  std::uint64_t favorites = 0;

  bool operator==(const PopularityRecord&) const = default;
};

/// log10(count + 1).
double log_transform(std::uint64_t count);

/// n x 3 matrix of log-transformed (upvotes, thanks, favorites).
Eigen::MatrixXd popularity_matrix(std::span<const PopularityRecord> records);

struct NmfResult {
  Eigen::MatrixXd W;  // n x r
  Eigen::MatrixXd H;  // r x m
  double reconstruction_error = 0.0;  // ||V - W H||_F
  std::size_t iterations = 0;
  std::vector<double> error_history;  // error after each iteration
};

/// Frobenius-loss NMF by multiplicative updates.
///
/// Rank 1 starts from one power step toward the leading singular pair
/// (h = 1, w = V h), where the updates coincide with alternating least
/// squares and converge to the optimal rank-1 factorization. Iteration stops
/// once both the relative error improvement and the relative change of W
/// drop below `tol`, or after `max_iter` iterations. An all-zero V returns
/// zero factors without iterating.
///
/// Throws InputError for rank < 1, tol <= 0 or a negative entry.
NmfResult nmf(const Eigen::MatrixXd& V, int rank, double tol = 1e-10, std::size_t max_iter = 10000);

/// Rank-1 factor of V rescaled to [0, 100]; all zeros when constant.
std::vector<double> reputation_from_matrix(const Eigen::MatrixXd& V);

/// log transform -> rank-1 NMF -> [0, 100]. Throws InputError when empty.
std::vector<double> social_reputation_index(std::span<const PopularityRecord> records);

/// Per-user mean of the three log-transformed counts.
std::vector<double> ensemble_popularity(std::span<const PopularityRecord> records);

}  // namespace egodiv
