#include <random>

#include "doctest.h"
#include "egodiv/errors.hpp"
#include "egodiv/graph.hpp"
#include "egodiv/union_find.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace egodiv;

TEST_CASE("from_edge_list dedups and keeps both directions") {
  const std::vector<Edge> edges{{1, 2}, {2, 1}, {1, 2}, {3, 1}};
  const auto g = FollowGraph::from_edge_list(edges);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.followers(1) == std::vector<NodeId>{2, 3});
  CHECK(g.followees(1) == std::vector<NodeId>{2});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 1}, {3, 1}});
}

TEST_CASE("self-loops are rejected") {
  const std::vector<Edge> edges{{4, 4}};
  CHECK_THROWS_AS(FollowGraph::from_edge_list(edges), InputError);
}

TEST_CASE("unknown ids") {
  const std::vector<Edge> edges{{1, 2}};
  const auto g = FollowGraph::from_edge_list(edges);
  CHECK_FALSE(g.contains(7));
  CHECK_THROWS_AS(g.require(7), NotFoundError);
  CHECK_THROWS_AS(ego_neighborhood(g, 7), NotFoundError);
}

TEST_CASE("ego neighborhood excludes the ego and outsiders") {
  // 1, 2, 3 follow ego 0; 1 -> 2 inside; 2 -> 9 leaves; 3 -> 0 only.
  const std::vector<Edge> edges{{1, 0}, {2, 0}, {3, 0}, {1, 2}, {2, 9}, {0, 1}};
  const auto g = FollowGraph::from_edge_list(edges);
  const auto n = ego_neighborhood(g, 0);
  CHECK(std::vector<NodeId>(n.members().begin(), n.members().end()) == std::vector<NodeId>{1, 2, 3});
  CHECK(n.edges() == std::vector<Edge>{{1, 2}});
}

TEST_CASE("neighborhood constructor validates") {
  CHECK_THROWS_AS(Neighborhood(0, {1, 2}, std::vector<Edge>{{1, 3}}), InputError);
  CHECK_THROWS_AS(Neighborhood(0, {0, 1}, std::vector<Edge>{}), InputError);
  CHECK_THROWS_AS(Neighborhood(0, {1, 2}, std::vector<Edge>{{1, 1}}), InputError);
}

TEST_CASE("induced, reversed, symmetrized") {
  const auto n = fixture::hub_and_pairs();
  std::vector<bool> keep(n.size(), true);
  keep[0] = false;
  const auto sub = n.induced(keep);
  CHECK(sub.size() == 7);
  CHECK(sub.edge_count() == n.edge_count() - 7);
  CHECK(n.reversed().edge_count() == n.edge_count());
  CHECK(count_strong_components(n.symmetrized()) == count_weak_components(n));
  CHECK(strong_components(n.reversed()) == strong_components(n));
}

TEST_CASE("worked components") {
  const auto fig = fixture::triangle_pair_isolates();
  CHECK(count_weak_components(fig) == 4);
  CHECK(count_strong_components(fig) == 6);
  const auto weak = weak_components(fig);
  CHECK(weak.blocks == std::vector<std::vector<NodeId>>{{1, 2, 3, 4}, {5, 6, 7}, {8}, {9}});
  const auto strong = strong_components(fig);
  CHECK(strong.blocks == std::vector<std::vector<NodeId>>{{1, 2, 3}, {4}, {5, 6}, {7}, {8}, {9}});

  const auto hub = fixture::hub_and_pairs();
  CHECK(count_weak_components(hub) == 1);
  CHECK(count_strong_components(hub) == 6);
}

TEST_CASE("components match reachability on random digraphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
    const auto [ids, edges] = oracle::random_digraph(rng, n, p);
    const Neighborhood nb(999999, ids, edges);
    REQUIRE(oracle::to_blocks(weak_components(nb)) == oracle::weak_blocks(ids, edges));
    REQUIRE(oracle::to_blocks(strong_components(nb)) == oracle::strong_blocks(ids, edges));
    REQUIRE(count_weak_components(nb) == oracle::weak_blocks(ids, edges).size());
    REQUIRE(count_strong_components(nb) == oracle::strong_blocks(ids, edges).size());
  }
}

TEST_CASE("component labels follow smallest member") {
  const auto n = fixture::triangle_pair_isolates();
  const auto labels = weak_component_labels(n);
  CHECK(labels == std::vector<std::uint32_t>{0, 0, 0, 0, 1, 1, 1, 2, 3});
}

TEST_CASE("strong components on a long path do not recurse") {
  std::vector<NodeId> ids;
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= 200000; ++i) {
    ids.push_back(i);
    if (i > 1) edges.push_back({i - 1, i});
  }
  edges.push_back({200000, 1});
  const Neighborhood ring(0, ids, edges);
  CHECK(count_strong_components(ring) == 1);
}

TEST_CASE("union-find") {
  UnionFind uf(5);
  CHECK(uf.set_count() == 5);
  uf.unite(0, 1);
  uf.unite(3, 4);
  uf.unite(1, 4);
  CHECK(uf.same(0, 3));
  CHECK_FALSE(uf.same(0, 2));
  CHECK(uf.set_size(4) == 4);
  CHECK(uf.set_count() == 2);
}
