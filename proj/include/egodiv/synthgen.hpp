#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "egodiv/graph.hpp"
#include "egodiv/reputation.hpp"

namespace egodiv {

/// One ego with planted follower groups.
struct EgoGenSpec {
  std::vector<std::size_t> component_sizes{1};
  double intra_edge_prob = 0.0;
  std::size_t hub_count = 0;
  std::size_t hub_out_fanout = 0;
  double reciprocal_prob = 0.0;
  std::uint64_t seed = 0;

  /// Throws InputError naming the offending field.
  void validate() const;
};

struct GeneratedEgo {
  FollowGraph graph;
  NodeId ego = 0;
};

/// Ego 0 with followers 1..N grouped per component_sizes, then hub followers.
/// Each group gets a random spanning out-arborescence (so it is weakly
/// connected by construction) plus extra ordered pairs with intra_edge_prob;
/// every intra edge gains its reverse with reciprocal_prob. Each hub follows
/// hub_out_fanout members spread round-robin across the groups.
GeneratedEgo gen_ego(const EgoGenSpec& spec);

struct PopulationGenSpec {
  std::size_t n_egos = 1000;
  double diversity_effect = 0.9;
  double noise_sigma = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

struct CovariateRecord {
  NodeId user = 0;
  std::uint64_t answer_count = 0;
};

struct Population {
  FollowGraph graph;
  std::vector<NodeId> egos;                 // ascending
  std::vector<PopularityRecord> popularity;  // one per ego, same order
  std::vector<CovariateRecord> covariates;   // one per ego, same order
  std::vector<std::size_t> diversity;       // measured 5-clip diversity per ego
};

/// Egos 1..n_egos draw 2-20 followers (log-uniform) from a shared account
/// pool. Some egos get fully isolated followers; the rest get planted groups
/// and, sometimes, a cross-group hub. After the graph is built each ego's
/// 5-clip diversity d is measured and x = minmax(log10(d + 1)) across egos;
/// each log10(count + 1) is drawn as 2 + diversity_effect * x + noise.
Population gen_population(const PopulationGenSpec& spec);

}  // namespace egodiv
