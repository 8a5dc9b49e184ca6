#include "egodiv/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "egodiv/errors.hpp"
#include "egodiv/kclip.hpp"
#include "egodiv/rng.hpp"
#include "egodiv/stats.hpp"

namespace egodiv {

namespace {

void check_probability(double p, const char* field) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError(std::string(field) + " must lie in [0, 1]");
}

void add_with_reverse(SplitMix64& rng, double reciprocal_prob, NodeId a, NodeId b, std::vector<Edge>& edges) {
  edges.push_back({a, b});
  if (rng.bernoulli(reciprocal_prob)) edges.push_back({b, a});
}

// Spanning out-arborescence (random recursive tree) plus random extra pairs.
void wire_group(SplitMix64& rng, const std::vector<NodeId>& group, double intra_p, double reciprocal_p,
                std::vector<Edge>& edges) {
  for (std::size_t t = 1; t < group.size(); ++t) {
    const NodeId parent = group[rng.below(t)];
    add_with_reverse(rng, reciprocal_p, parent, group[t], edges);
  }
  if (intra_p <= 0.0) return;
  for (NodeId a : group) {
    for (NodeId b : group) {
      if (a != b && rng.bernoulli(intra_p)) add_with_reverse(rng, reciprocal_p, a, b, edges);
    }
  }
}

}  // namespace

void EgoGenSpec::validate() const {
  if (component_sizes.empty()) throw InputError("component_sizes must not be empty");
  for (std::size_t s : component_sizes) {
    if (s < 1) throw InputError("component_sizes entries must be >= 1");
  }
  check_probability(intra_edge_prob, "intra_edge_prob");
  check_probability(reciprocal_prob, "reciprocal_prob");
}

GeneratedEgo gen_ego(const EgoGenSpec& spec) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  const NodeId ego = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<NodeId>> groups;
  NodeId next = 1;
  for (std::size_t size : spec.component_sizes) {
    std::vector<NodeId> group;
    for (std::size_t i = 0; i < size; ++i) group.push_back(next++);
    groups.push_back(std::move(group));
  }
  for (const auto& group : groups) {
    for (NodeId f : group) edges.push_back({f, ego});
    wire_group(rng, group, spec.intra_edge_prob, spec.reciprocal_prob, edges);
  }
  for (std::size_t h = 0; h < spec.hub_count; ++h) {
    const NodeId hub = next++;
    edges.push_back({hub, ego});
    std::vector<std::size_t> used(groups.size(), 0);
    for (std::size_t f = 0; f < spec.hub_out_fanout; ++f) {
      const std::size_t g = f % groups.size();
      if (used[g] >= groups[g].size()) continue;
      // Distinct targets per group: walk a random rotation.
      if (used[g] == 0) std::rotate(groups[g].begin(), groups[g].begin() + static_cast<std::ptrdiff_t>(rng.below(groups[g].size())), groups[g].end());
      edges.push_back({hub, groups[g][used[g]++]});
    }
  }
  return {FollowGraph::from_edge_list(edges), ego};
}

void PopulationGenSpec::validate() const {
  if (n_egos < 1) throw InputError("n_egos must be >= 1");
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) throw InputError("noise_sigma must be >= 0");
  if (!std::isfinite(diversity_effect)) throw InputError("diversity_effect must be finite");
}

Population gen_population(const PopulationGenSpec& spec) {
  spec.validate();
  constexpr std::size_t min_followers = 2;
  constexpr std::size_t max_followers = 20;
  constexpr double intra_p = 0.1;
  constexpr double reciprocal_p = 0.1;
  constexpr double hub_p = 0.2;

  const std::size_t n = spec.n_egos;
  const std::size_t pool = std::max<std::size_t>(64, 2 * n);
  const NodeId first_account = static_cast<NodeId>(n) + 1;

  Population pop;
  std::vector<Edge> edges;
  edges.reserve(n * 12);
  const double log_span = std::log(static_cast<double>(max_followers) / static_cast<double>(min_followers));

  for (std::size_t e = 0; e < n; ++e) {
    const NodeId ego = static_cast<NodeId>(e) + 1;
    pop.egos.push_back(ego);
    SplitMix64 rng(derive_seed(spec.seed, e));

    const double u = rng.uniform();
    const auto d = std::min(max_followers,
                            static_cast<std::size_t>(std::floor(min_followers * std::exp(u * log_span))));
    std::vector<NodeId> followers;
    while (followers.size() < d) {
      const NodeId f = first_account + rng.below(pool);
      if (std::find(followers.begin(), followers.end(), f) == followers.end()) followers.push_back(f);
    }
    for (NodeId f : followers) edges.push_back({f, ego});

    // Isolated followers are likelier for small audiences.
    const double isolated_p = 0.5 - 0.25 * std::log(static_cast<double>(d) / min_followers) / log_span;
    if (rng.bernoulli(isolated_p)) continue;

    // Between one and d - 1 groups, so at least one group has a tie.
    const std::size_t group_count = 1 + rng.below(d - 1);
    std::vector<std::vector<NodeId>> groups(group_count);
    for (std::size_t i = 0; i < d; ++i) {
      groups[i < group_count ? i : rng.below(group_count)].push_back(followers[i]);
    }
    for (const auto& g : groups) wire_group(rng, g, intra_p, reciprocal_p, edges);

    if (group_count >= 2 && rng.bernoulli(hub_p)) {
      const NodeId hub = groups[0][0];
      const std::size_t fanout = 5 + rng.below(3);
      for (std::size_t f = 0; f < fanout; ++f) {
        const auto& target_group = groups[1 + f % (group_count - 1)];
        edges.push_back({hub, target_group[rng.below(target_group.size())]});
      }
    }
  }
  pop.graph = FollowGraph::from_edge_list(edges);
  edges.clear();
  edges.shrink_to_fit();

  ClipConfig clip;
  std::vector<double> log_div(n);
  pop.diversity.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    pop.diversity[e] = k_clip_diversity(ego_neighborhood(pop.graph, pop.egos[e]), clip);
    log_div[e] = std::log10(static_cast<double>(pop.diversity[e]) + 1.0);
  }
  const auto x = minmax_normalize(log_div);

  auto draw_count = [](double log_value) {
    const double raw = std::pow(10.0, log_value) - 1.0;
    return raw <= 0.0 ? std::uint64_t{0} : static_cast<std::uint64_t>(std::llround(raw));
  };
  for (std::size_t e = 0; e < n; ++e) {
    SplitMix64 rng(derive_seed(spec.seed ^ 0x5EED5EED5EED5EEDULL, e));
    const double signal = 2.0 + spec.diversity_effect * x[e];
    PopularityRecord rec;
    rec.user = pop.egos[e];
    rec.upvotes = draw_count(signal + spec.noise_sigma * rng.normal());
    rec.thanks = draw_count(signal + spec.noise_sigma * rng.normal());
    rec.favorites = draw_count(signal + spec.noise_sigma * rng.normal());
    pop.popularity.push_back(rec);

    const double indeg = static_cast<double>(pop.graph.indegree(pop.egos[e]));
    const double answers_log = 0.5 + 0.5 * std::log10(indeg + 1.0) + 0.3 * rng.normal();
    pop.covariates.push_back({pop.egos[e], draw_count(answers_log)});
  }
  return pop;
}

}  // namespace egodiv
