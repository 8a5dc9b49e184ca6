#include "doctest.h"
#include "egodiv/diversity.hpp"
#include "egodiv/errors.hpp"
#include "egodiv/kclip.hpp"
#include "egodiv/stats.hpp"
#include "egodiv/synthgen.hpp"
#include "oracles.hpp"

using namespace egodiv;

TEST_CASE("ego spec validation") {
  EgoGenSpec s;
  s.component_sizes = {};
  CHECK_THROWS_AS(gen_ego(s), InputError);
  s.component_sizes = {3, 0};
  CHECK_THROWS_AS(gen_ego(s), InputError);
  s.component_sizes = {3};
  s.intra_edge_prob = 1.5;
  CHECK_THROWS_WITH_AS(gen_ego(s), doctest::Contains("intra_edge_prob"), InputError);
  CHECK_THROWS_AS((gen_population({0})), InputError);
  CHECK_THROWS_AS((gen_population({10, 0.9, -1.0})), InputError);
}

TEST_CASE("isolated followers") {
  EgoGenSpec s;
  s.component_sizes.assign(100, 1);
  const auto gen = gen_ego(s);
  const auto n = ego_neighborhood(gen.graph, gen.ego);
  CHECK(n.size() == 100);
  CHECK(weak_diversity(n) == 100);
  CHECK(k_clip_diversity(n, {}) == 100);
}

TEST_CASE("planted groups give the planted weak count") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    EgoGenSpec s;
    s.component_sizes = {1 + seed % 7, 5, 1, 12, 2};
    s.intra_edge_prob = 0.05 * static_cast<double>(seed % 5);
    s.reciprocal_prob = 0.3;
    s.seed = seed;
    const auto gen = gen_ego(s);
    const auto n = ego_neighborhood(gen.graph, gen.ego);
    const auto edges = n.edges();
    const std::vector<NodeId> ids(n.members().begin(), n.members().end());
    REQUIRE(weak_diversity(n) == 5);
    REQUIRE(oracle::weak_count(ids, edges) == 5);
  }
}

TEST_CASE("one giant component among isolates") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EgoGenSpec s;
    s.component_sizes = {110};
    s.component_sizes.resize(41, 1);
    s.reciprocal_prob = 0.2;
    s.seed = seed;
    const auto gen = gen_ego(s);
    const auto n = ego_neighborhood(gen.graph, gen.ego);
    REQUIRE(n.size() == 150);
    REQUIRE(weak_diversity(n) == 41);
    const auto d5 = k_clip_diversity(n, {5});
    CHECK(d5 > 41);
    const std::vector<NodeId> ids(n.members().begin(), n.members().end());
    CHECK(d5 == oracle::kclip_single(ids, n.edges(), 5).d_k);
  }
}

TEST_CASE("a hub joins two groups that k-clip separates again") {
  EgoGenSpec s;
  s.component_sizes = {50, 50};
  s.hub_count = 1;
  s.hub_out_fanout = 20;
  s.seed = 12;
  const auto gen = gen_ego(s);
  const auto n = ego_neighborhood(gen.graph, gen.ego);
  CHECK(weak_diversity(n) == 1);
  CHECK(k_clip_diversity(n, {5}) >= 2);
}

TEST_CASE("generation is deterministic per seed") {
  EgoGenSpec s;
  s.component_sizes = {10, 20, 5};
  s.intra_edge_prob = 0.2;
  s.hub_count = 2;
  s.hub_out_fanout = 9;
  s.seed = 99;
  CHECK(gen_ego(s).graph.edges() == gen_ego(s).graph.edges());
  auto other = s;
  other.seed = 100;
  CHECK(gen_ego(s).graph.edges() != gen_ego(other).graph.edges());

  const PopulationGenSpec p{300, 0.9, 0.05, 4};
  const auto a = gen_population(p);
  const auto b = gen_population(p);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.popularity == b.popularity);
  CHECK(a.diversity == b.diversity);
}

TEST_CASE("population shape") {
  const auto pop = gen_population({1, 0.9, 0.05, 1});
  CHECK(pop.egos == std::vector<NodeId>{1});
  CHECK(pop.popularity.size() == 1);
  CHECK(pop.covariates.size() == 1);

  const auto big = gen_population({2000, 0.9, 0.05, 2});
  std::size_t max_div = 0, other = 0;
  for (std::size_t e = 0; e < big.egos.size(); ++e) {
    const auto d = big.graph.indegree(big.egos[e]);
    REQUIRE(d >= 2);
    REQUIRE(d <= 20);
    REQUIRE(big.diversity[e] == k_clip_diversity(ego_neighborhood(big.graph, big.egos[e]), {}));
    (big.diversity[e] == d ? max_div : other) += 1;
  }
  CHECK(max_div > 200);
  CHECK(other > 200);
}

TEST_CASE("planted effect is recoverable and absent when zero") {
  auto slope = [](const Population& pop) {
    std::vector<double> logd, up;
    for (std::size_t e = 0; e < pop.egos.size(); ++e) {
      logd.push_back(std::log10(static_cast<double>(pop.diversity[e]) + 1.0));
      up.push_back(std::log10(static_cast<double>(pop.popularity[e].upvotes) + 1.0));
    }
    const auto x = minmax_normalize(logd);
    Eigen::MatrixXd X(static_cast<Eigen::Index>(x.size()), 1);
    for (std::size_t i = 0; i < x.size(); ++i) X(static_cast<Eigen::Index>(i), 0) = x[i];
    return ols(Eigen::Map<const Eigen::VectorXd>(up.data(), static_cast<Eigen::Index>(up.size())), add_intercept(X));
  };
  const auto planted = slope(gen_population({5000, 0.9, 0.05, 8}));
  CHECK(std::abs(planted.coefficients[1] - 0.9) <= 3 * planted.std_errors[1]);

  int covered = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto null = slope(gen_population({800, 0.0, 0.05, seed}));
    covered += null.ci95[1].first <= 0.0 && 0.0 <= null.ci95[1].second;
  }
  CHECK(covered >= 18);
}
