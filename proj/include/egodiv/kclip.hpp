#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "egodiv/graph.hpp"

namespace egodiv {

enum class RemovalMode { single, multiple, adaptive };

std::string_view to_string(RemovalMode mode) noexcept;
/// Throws InputError on an unknown name.
RemovalMode parse_removal_mode(std::string_view name);

struct ClipConfig {
  int k = 5;
  RemovalMode mode = RemovalMode::single;
  /// Adaptive mode keeps batch removal while more than this many nodes sit in
  /// weakly connected components of size >= 2.
  std::size_t adaptive_threshold = 1000;

  /// Throws InputError if k < 1 or adaptive_threshold < 1.
  void validate() const;
};

struct RemovalStep {
  std::size_t index = 0;
  RemovalMode mode = RemovalMode::single;  // single or multiple, as applied
  std::vector<NodeId> nodes;               // in removal order
  std::vector<std::size_t> outdegrees;     // outdegree of each node when removed
};

struct ClipTrace {
  RemovalMode mode = RemovalMode::single;
  int k = 0;
  std::vector<RemovalStep> removed;
  Neighborhood remaining;
  std::size_t d_k = 0;  // weak components of `remaining`

  std::size_t removed_count() const noexcept;
};

/// Peels nodes of outdegree >= k until every surviving outdegree is < k.
///
/// Single mode removes one node per step: the current maximum outdegree,
/// ties broken by larger current total degree, then by smaller NodeId.
/// Multiple mode takes every node at the current maximum outdegree as one
/// step, dropping them in that same order; a batch node whose outdegree fell
/// below the batch level through earlier drops of the same step is kept.
/// Adaptive mode uses multiple steps while more than `adaptive_threshold`
/// nodes lie in non-singleton weak components, and single steps afterwards.
ClipTrace k_clip_decompose(const Neighborhood& n, const ClipConfig& cfg);

/// Weak component count after decomposition; |members| when fewer than two.
std::size_t k_clip_diversity(const Neighborhood& n, const ClipConfig& cfg);

}  // namespace egodiv
