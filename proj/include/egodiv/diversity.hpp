#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "egodiv/graph.hpp"

namespace egodiv {

/// Per-ego structural diversity record.
struct DiversityReport {
  NodeId ego = 0;
  std::size_t indegree = 0;
  std::size_t weak = 0;
  std::size_t strong = 0;
  std::map<int, std::size_t> kclip;           // k -> k-clip diversity
  std::optional<std::size_t> bridged_kclip;   // empty when the ego was skipped
  bool bridged_skipped = false;

  bool operator==(const DiversityReport&) const = default;
};

/// Number of followers. Throws NotFoundError for an unknown ego.
std::size_t indegree(const FollowGraph& g, NodeId ego);

// Neighborhoods with fewer than two members report their member count for
// both measures, since there are no ties to form components from.
std::size_t weak_diversity(const Neighborhood& n);
std::size_t strong_diversity(const Neighborhood& n);

}  // namespace egodiv
