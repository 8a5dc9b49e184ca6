#include "egodiv/bridges.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "egodiv/errors.hpp"
#include "egodiv/union_find.hpp"

namespace egodiv {

void BridgeConfig::validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw InputError("jaccard threshold must lie in [0, 1], got " + std::to_string(threshold));
  }
}

double jaccard_similarity(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
}

std::size_t ComponentGraph::unlinked_count() const {
  UnionFind uf(components.size());
  for (const auto& [a, b] : bridge_edges) uf.unite(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  return uf.set_count();
}

namespace {

// Scores every cross-component survivor pair. With `edges` set, records each
// distinct bridged component pair; otherwise only merges `merged`, skipping
// pairs that are already joined.
void score_pairs(const Neighborhood& remaining, const std::vector<std::uint32_t>& labels, const FollowGraph& g,
                 const BridgeConfig& cfg, UnionFind& merged,
                 std::set<std::pair<std::size_t, std::size_t>>* edges) {
  const auto m = static_cast<std::uint32_t>(remaining.size());
  if (m < 2) return;
  const LocalIndex ego = g.require(remaining.ego());
  const std::size_t base = cfg.include_ego_in_followees ? 1 : 0;

  std::vector<LocalIndex> survivor(m);
  std::vector<std::size_t> set_size(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    survivor[i] = g.require(remaining.id_of(i));
    const auto followees = g.out_neighbors(survivor[i]);
    const bool follows_ego = std::binary_search(followees.begin(), followees.end(), ego);
    set_size[i] = followees.size() - (follows_ego && !cfg.include_ego_in_followees ? 1 : 0);
  }

  // Inverted index over followees other than the ego.
  std::vector<std::pair<LocalIndex, std::uint32_t>> postings;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (LocalIndex f : g.out_neighbors(survivor[i])) {
      if (f != ego) postings.emplace_back(f, i);
    }
  }
  std::sort(postings.begin(), postings.end());
  std::vector<std::size_t> post_start;  // start offset of each followee's run
  std::vector<LocalIndex> post_key;
  for (std::size_t p = 0; p < postings.size(); ++p) {
    if (p == 0 || postings[p].first != postings[p - 1].first) {
      post_start.push_back(p);
      post_key.push_back(postings[p].first);
    }
  }
  post_start.push_back(postings.size());

  std::vector<std::uint32_t> shared(m, 0);
  std::vector<std::uint32_t> touched;
  auto consider = [&](std::uint32_t i, std::uint32_t j) {
    const auto li = labels[i];
    const auto lj = labels[j];
    if (li == lj) return;
    if (!edges && merged.same(li, lj)) return;
    const std::size_t inter = shared[j] + base;
    const std::size_t uni = set_size[i] + set_size[j] - inter;
    const double sim = uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
    if (sim > cfg.threshold) {
      merged.unite(li, lj);
      if (edges) edges->emplace(std::min(li, lj), std::max(li, lj));
    }
  };

  for (std::uint32_t i = 0; i < m; ++i) {
    for (LocalIndex f : g.out_neighbors(survivor[i])) {
      if (f == ego) continue;
      const auto slot = static_cast<std::size_t>(std::lower_bound(post_key.begin(), post_key.end(), f) - post_key.begin());
      for (std::size_t p = post_start[slot]; p < post_start[slot + 1]; ++p) {
        const std::uint32_t j = postings[p].second;
        if (j <= i) continue;
        if (shared[j]++ == 0) touched.push_back(j);
      }
    }
    if (base > 0) {
      // Every pair shares the ego, so every pair has a positive score.
      for (std::uint32_t j = i + 1; j < m; ++j) consider(i, j);
    } else {
      for (std::uint32_t j : touched) consider(i, j);
    }
    for (std::uint32_t j : touched) shared[j] = 0;
    touched.clear();
  }
}

bool over_limit(std::size_t indegree, const BridgeConfig& cfg) { return indegree > cfg.max_followers; }

}  // namespace

std::optional<ComponentGraph> bridged_components(const ClipTrace& trace, const FollowGraph& g,
                                                 const BridgeConfig& cfg) {
  cfg.validate();
  if (over_limit(g.indegree(trace.remaining.ego()), cfg)) return std::nullopt;

  ComponentGraph out;
  out.components = weak_components(trace.remaining);
  auto labels = weak_component_labels(trace.remaining);
  UnionFind merged(out.components.size());
  std::set<std::pair<std::size_t, std::size_t>> edges;
  score_pairs(trace.remaining, labels, g, cfg, merged, &edges);
  out.bridge_edges.assign(edges.begin(), edges.end());
  return out;
}

std::optional<std::size_t> bridged_k_clip_diversity(const ClipTrace& trace, std::size_t indegree,
                                                    const FollowGraph& g, const BridgeConfig& cfg) {
  cfg.validate();
  if (over_limit(indegree, cfg)) return std::nullopt;
  if (indegree < 2) return indegree;
  auto labels = weak_component_labels(trace.remaining);
  UnionFind merged(trace.d_k);
  score_pairs(trace.remaining, labels, g, cfg, merged, nullptr);
  return merged.set_count();
}

std::optional<std::size_t> bridged_k_clip_diversity(const Neighborhood& n, const FollowGraph& g,
                                                    const ClipConfig& clip, const BridgeConfig& cfg) {
  cfg.validate();
  clip.validate();
  if (over_limit(n.size(), cfg)) return std::nullopt;
  if (n.size() < 2) return n.size();
  return bridged_k_clip_diversity(k_clip_decompose(n, clip), n.size(), g, cfg);
}

}  // namespace egodiv
