#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "egodiv/graph.hpp"
#include "egodiv/kclip.hpp"

namespace egodiv {

struct BridgeConfig {
  double threshold = 0.2;
  std::size_t max_followers = 10000;
  bool include_ego_in_followees = true;

  /// Throws InputError unless 0 <= threshold <= 1.
  void validate() const;
};

/// |a ∩ b| / |a ∪ b| over ascending, duplicate-free id lists; 0 when both are empty.
double jaccard_similarity(std::span<const NodeId> a, std::span<const NodeId> b);

/// k-clip components of one ego plus the bridges found between them.
struct ComponentGraph {
  Partition components;
  /// Undirected (i, j) with i < j, indices into components.blocks; sorted.
  std::vector<std::pair<std::size_t, std::size_t>> bridge_edges;

  /// Connected components once bridged blocks are merged.
  std::size_t unlinked_count() const;
};

/// Links the weak components of `trace.remaining` wherever two surviving
/// followers in different components have followee-set similarity strictly
/// above the threshold. Followee sets come from the full graph. Returns
/// nullopt (ego skipped) when the ego has more than max_followers followers.
std::optional<ComponentGraph> bridged_components(const ClipTrace& trace, const FollowGraph& g,
                                                 const BridgeConfig& cfg);

/// Unlinked social components after bridging; |members| when fewer than two.
/// nullopt when the ego is skipped for exceeding max_followers.
std::optional<std::size_t> bridged_k_clip_diversity(const Neighborhood& n, const FollowGraph& g,
                                                    const ClipConfig& clip, const BridgeConfig& cfg);

/// Same measure from an existing decomposition of `n`.
std::optional<std::size_t> bridged_k_clip_diversity(const ClipTrace& trace, std::size_t indegree,
                                                    const FollowGraph& g, const BridgeConfig& cfg);

}  // namespace egodiv
