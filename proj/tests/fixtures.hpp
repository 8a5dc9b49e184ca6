#pragma once

// Hand-built instances with known measure values.

#include <vector>

#include "egodiv/graph.hpp"

namespace fixture {

using egodiv::Edge;
using egodiv::NodeId;

inline constexpr NodeId kEgo = 0;

// Adds `count` fresh outside accounts (ids from `next`) as followees of `who`.
inline void follow_fresh(std::vector<Edge>& edges, NodeId who, std::size_t count, NodeId& next) {
  for (std::size_t i = 0; i < count; ++i) edges.push_back({who, next++});
}

// Eight followers: node 1 follows six others, node 2 follows three, two
// reciprocal pairs, and node 8 follows node 1.
inline egodiv::Neighborhood hub_and_pairs() {
  std::vector<Edge> e;
  for (NodeId t = 2; t <= 7; ++t) e.push_back({1, t});
  for (NodeId t : {3, 5, 7}) e.push_back({2, t});
  e.insert(e.end(), {{3, 4}, {4, 3}, {5, 6}, {6, 5}, {8, 1}});
  return egodiv::Neighborhood(kEgo, {1, 2, 3, 4, 5, 6, 7, 8}, e);
}

// Nine followers: a directed triangle with a tail, a reciprocal pair with a
// tail, and two isolated followers.
inline egodiv::Neighborhood triangle_pair_isolates() {
  std::vector<Edge> e{{1, 2}, {2, 3}, {3, 1}, {3, 4}, {5, 6}, {6, 5}, {6, 7}};
  return egodiv::Neighborhood(kEgo, {1, 2, 3, 4, 5, 6, 7, 8, 9}, e);
}

// Four followers, one tie (3 -> 4). Followers 1 and 2 share the ego and two
// more followees out of five each.
inline egodiv::FollowGraph four_followers_one_bridge() {
  std::vector<Edge> e;
  for (NodeId f = 1; f <= 4; ++f) e.push_back({f, kEgo});
  e.push_back({3, 4});
  e.insert(e.end(), {{1, 100}, {1, 101}, {1, 102}, {2, 100}, {2, 101}, {2, 103}});
  NodeId next = 200;
  follow_fresh(e, 3, 3, next);
  follow_fresh(e, 4, 4, next);
  return egodiv::FollowGraph::from_edge_list(e);
}

// Nine followers in seven components ({5,6}, {7,8} and five singletons).
// Followers 1 and 2 have Jaccard 50/104; followers 3 and 4 have 2/17; all
// other cross pairs share only the ego.
inline egodiv::FollowGraph nine_followers_two_candidates() {
  std::vector<Edge> e;
  for (NodeId f = 1; f <= 9; ++f) e.push_back({f, kEgo});
  e.insert(e.end(), {{5, 6}, {7, 8}});
  NodeId next = 1000;
  for (std::size_t i = 0; i < 49; ++i) {
    e.push_back({1, next});
    e.push_back({2, next});
    ++next;
  }
  follow_fresh(e, 1, 27, next);
  follow_fresh(e, 2, 27, next);
  e.push_back({3, next});
  e.push_back({4, next});
  ++next;
  follow_fresh(e, 3, 7, next);
  follow_fresh(e, 4, 8, next);
  for (NodeId f = 5; f <= 9; ++f) follow_fresh(e, f, 6, next);
  return egodiv::FollowGraph::from_edge_list(e);
}

}  // namespace fixture
