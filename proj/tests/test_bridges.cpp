#include <random>

#include "doctest.h"
#include "egodiv/bridges.hpp"
#include "egodiv/errors.hpp"
#include "egodiv/kclip.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace egodiv;

namespace {

std::vector<NodeId> range(NodeId lo, NodeId hi) {
  std::vector<NodeId> out;
  for (NodeId i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("jaccard") {
  const auto a = range(1, 5);
  CHECK(jaccard_similarity(a, a) == 1.0);
  CHECK(jaccard_similarity(a, range(6, 9)) == 0.0);
  CHECK(jaccard_similarity({}, {}) == 0.0);
  CHECK(jaccard_similarity(range(1, 74), range(27, 100)) == doctest::Approx(0.48).epsilon(1e-15));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS((BridgeConfig{-0.1}.validate()), InputError);
  CHECK_THROWS_AS((BridgeConfig{1.5}.validate()), InputError);
  CHECK_NOTHROW((BridgeConfig{1.0}.validate()));
}

TEST_CASE("four followers: k-clip 3, bridged 2") {
  const auto g = fixture::four_followers_one_bridge();
  const auto n = ego_neighborhood(g, fixture::kEgo);
  CHECK(n.size() == 4);
  CHECK(k_clip_diversity(n, {}) == 3);
  CHECK(bridged_k_clip_diversity(n, g, {}, {}) == 2);
  const auto cg = bridged_components(k_clip_decompose(n, {}), g, {});
  REQUIRE(cg);
  CHECK(cg->bridge_edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
}

TEST_CASE("nine followers: k-clip 7, bridged 6") {
  const auto g = fixture::nine_followers_two_candidates();
  const auto f1 = g.followees(1), f2 = g.followees(2), f3 = g.followees(3), f4 = g.followees(4);
  CHECK(jaccard_similarity(f1, f2) == doctest::Approx(50.0 / 104.0));
  CHECK(jaccard_similarity(f1, f2) > 0.2);
  CHECK(std::round(jaccard_similarity(f1, f2) * 100) == 48);
  CHECK(jaccard_similarity(f3, f4) == doctest::Approx(2.0 / 17.0));
  CHECK(jaccard_similarity(f3, f4) < 0.2);
  CHECK(std::round(jaccard_similarity(f3, f4) * 100) == 12);

  const auto n = ego_neighborhood(g, fixture::kEgo);
  CHECK(k_clip_diversity(n, {}) == 7);
  CHECK(bridged_k_clip_diversity(n, g, {}, {}) == 6);
  // Just below 2/17 the second pair bridges as well.
  CHECK(bridged_k_clip_diversity(n, g, {}, {0.1}) == 5);
}

TEST_CASE("threshold extremes") {
  const auto g = fixture::nine_followers_two_candidates();
  const auto n = ego_neighborhood(g, fixture::kEgo);
  CHECK(bridged_k_clip_diversity(n, g, {}, {1.0}) == 7);
  CHECK(bridged_k_clip_diversity(n, g, {}, {0.0}) == 1);
  BridgeConfig no_ego{0.0};
  no_ego.include_ego_in_followees = false;
  // Without the ego only the two planted pairs share anything.
  CHECK(bridged_k_clip_diversity(n, g, {}, no_ego) == 5);
}

TEST_CASE("egos over the follower cap are skipped") {
  const auto g = fixture::nine_followers_two_candidates();
  const auto n = ego_neighborhood(g, fixture::kEgo);
  BridgeConfig cfg;
  cfg.max_followers = 8;
  CHECK_FALSE(bridged_k_clip_diversity(n, g, {}, cfg).has_value());
  cfg.max_followers = 9;
  CHECK(bridged_k_clip_diversity(n, g, {}, cfg) == 6);
}

TEST_CASE("small egos") {
  const std::vector<Edge> edges{{1, 0}, {2, 3}};
  const auto g = FollowGraph::from_edge_list(edges);
  CHECK(bridged_k_clip_diversity(ego_neighborhood(g, 0), g, {}, {}) == 1);
  CHECK(bridged_k_clip_diversity(ego_neighborhood(g, 2), g, {}, {}) == 0);
}

TEST_CASE("agrees with the pairwise oracle and stays within bounds") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const auto [ids, inner] = oracle::random_neighborhood(rng, 40);
    const auto all = oracle::embed(rng, ids, inner, 12);
    const auto g = FollowGraph::from_edge_list(all);
    if (!g.contains(0)) continue;
    const auto n = ego_neighborhood(g, 0);
    for (int k : {2, 5}) {
      const auto clip = oracle::kclip_single(ids, inner, k);
      std::size_t prev = 0;
      for (int step = 0; step <= 20; ++step) {
        const double t = step / 20.0;
        for (bool with_ego : {true, false}) {
          BridgeConfig cfg{t};
          cfg.include_ego_in_followees = with_ego;
          const auto got = bridged_k_clip_diversity(n, g, {k}, cfg);
          REQUIRE(got);
          REQUIRE(*got == oracle::bridged(all, 0, clip, t, with_ego));
          REQUIRE(*got <= clip.d_k);
          REQUIRE(*got >= std::min<std::size_t>(1, n.size()));
          if (with_ego) {
            REQUIRE(*got >= prev);
            prev = *got;
          }
        }
      }
    }
  }
}

TEST_CASE("bridging only merges k-clip components") {
  const auto g = fixture::nine_followers_two_candidates();
  const auto n = ego_neighborhood(g, fixture::kEgo);
  const auto trace = k_clip_decompose(n, {});
  const auto cg = bridged_components(trace, g, {});
  REQUIRE(cg);
  CHECK(cg->components == weak_components(trace.remaining));
  CHECK(cg->unlinked_count() == 6);
}
