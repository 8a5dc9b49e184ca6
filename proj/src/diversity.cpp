#include "egodiv/diversity.hpp"

namespace egodiv {

std::size_t indegree(const FollowGraph& g, NodeId ego) { return g.indegree(ego); }

std::size_t weak_diversity(const Neighborhood& n) {
  if (n.size() < 2) return n.size();
  return count_weak_components(n);
}

std::size_t strong_diversity(const Neighborhood& n) {
  if (n.size() < 2) return n.size();
  return count_strong_components(n);
}

}  // namespace egodiv
