#include "egodiv/graph.hpp"

#include <algorithm>
#include <string>

#include "egodiv/errors.hpp"
#include "egodiv/union_find.hpp"

namespace egodiv {

namespace {

using LocalEdge = std::pair<LocalIndex, LocalIndex>;

// CSR from (from, to) pairs sorted by `from`.
void fill_csr(std::size_t n, const std::vector<LocalEdge>& sorted, bool by_first,
              std::vector<std::size_t>& offsets, std::vector<LocalIndex>& targets) {
  offsets.assign(n + 1, 0);
  targets.resize(sorted.size());
  for (const auto& [a, b] : sorted) ++offsets[(by_first ? a : b) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  for (std::size_t i = 0; i < sorted.size(); ++i) targets[i] = by_first ? sorted[i].second : sorted[i].first;
}

void build_both(std::size_t n, std::vector<LocalEdge>& edges, std::vector<std::size_t>& out_offsets,
                std::vector<LocalIndex>& out_targets, std::vector<std::size_t>& in_offsets,
                std::vector<LocalIndex>& in_sources) {
  fill_csr(n, edges, true, out_offsets, out_targets);
  std::sort(edges.begin(), edges.end(), [](const LocalEdge& x, const LocalEdge& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  fill_csr(n, edges, false, in_offsets, in_sources);
}

}  // namespace

FollowGraph FollowGraph::from_edge_list(std::span<const Edge> edges) {
  FollowGraph g;
  g.ids_.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.from == e.to) {
      throw InputError("self-loop edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) + ")");
    }
    g.ids_.push_back(e.from);
    g.ids_.push_back(e.to);
  }
  std::sort(g.ids_.begin(), g.ids_.end());
  g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());
  g.ids_.shrink_to_fit();

  std::vector<LocalEdge> local;
  local.reserve(edges.size());
  for (const Edge& e : edges) local.emplace_back(*g.index_of(e.from), *g.index_of(e.to));
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());

  build_both(g.ids_.size(), local, g.out_offsets_, g.out_targets_, g.in_offsets_, g.in_sources_);
  return g;
}

std::optional<LocalIndex> FollowGraph::index_of(NodeId id) const noexcept {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<LocalIndex>(it - ids_.begin());
}

LocalIndex FollowGraph::require(NodeId id) const {
  auto idx = index_of(id);
  if (!idx) throw NotFoundError("node " + std::to_string(id) + " not in graph");
  return *idx;
}

std::vector<NodeId> FollowGraph::followees(NodeId id) const {
  std::vector<NodeId> out;
  for (LocalIndex v : out_neighbors(require(id))) out.push_back(ids_[v]);
  return out;
}

std::vector<NodeId> FollowGraph::followers(NodeId id) const {
  std::vector<NodeId> out;
  for (LocalIndex v : in_neighbors(require(id))) out.push_back(ids_[v]);
  return out;
}

std::size_t FollowGraph::indegree(NodeId id) const { return in_neighbors(require(id)).size(); }
std::size_t FollowGraph::outdegree(NodeId id) const { return out_neighbors(require(id)).size(); }

bool FollowGraph::has_edge(NodeId from, NodeId to) const noexcept {
  auto a = index_of(from);
  auto b = index_of(to);
  if (!a || !b) return false;
  auto targets = out_neighbors(*a);
  return std::binary_search(targets.begin(), targets.end(), *b);
}

std::vector<Edge> FollowGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (LocalIndex v = 0; v < ids_.size(); ++v) {
    for (LocalIndex w : out_neighbors(v)) out.push_back({ids_[v], ids_[w]});
  }
  return out;
}

// ---------------------------------------------------------------------------

Neighborhood::Neighborhood(NodeId ego, std::vector<NodeId> members, std::span<const Edge> edges)
    : ego_(ego), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (std::binary_search(members_.begin(), members_.end(), ego_)) {
    throw InputError("ego " + std::to_string(ego_) + " listed among its own followers");
  }
  std::vector<LocalEdge> local;
  local.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.from == e.to) throw InputError("self-loop edge on " + std::to_string(e.from));
    auto a = index_of(e.from);
    auto b = index_of(e.to);
    if (!a || !b) {
      throw InputError("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                       ") has an endpoint outside the neighborhood");
    }
    local.emplace_back(*a, *b);
  }
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  build(std::move(local));
}

Neighborhood Neighborhood::from_local(NodeId ego, std::vector<NodeId> members, std::vector<LocalEdge> local_edges) {
  Neighborhood n;
  n.ego_ = ego;
  n.members_ = std::move(members);
  n.build(std::move(local_edges));
  return n;
}

void Neighborhood::build(std::vector<LocalEdge> local_edges) {
  build_both(members_.size(), local_edges, out_offsets_, out_targets_, in_offsets_, in_sources_);
}

std::optional<LocalIndex> Neighborhood::index_of(NodeId id) const noexcept {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) return std::nullopt;
  return static_cast<LocalIndex>(it - members_.begin());
}

std::vector<Edge> Neighborhood::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (LocalIndex v = 0; v < members_.size(); ++v) {
    for (LocalIndex w : this->out(v)) out.push_back({members_[v], members_[w]});
  }
  return out;
}

Neighborhood Neighborhood::induced(const std::vector<bool>& keep) const {
  std::vector<LocalIndex> remap(members_.size(), 0);
  std::vector<NodeId> kept;
  for (LocalIndex v = 0; v < members_.size(); ++v) {
    if (keep[v]) {
      remap[v] = static_cast<LocalIndex>(kept.size());
      kept.push_back(members_[v]);
    }
  }
  std::vector<LocalEdge> local;
  for (LocalIndex v = 0; v < members_.size(); ++v) {
    if (!keep[v]) continue;
    for (LocalIndex w : out(v)) {
      if (keep[w]) local.emplace_back(remap[v], remap[w]);
    }
  }
  return from_local(ego_, std::move(kept), std::move(local));
}

Neighborhood Neighborhood::reversed() const {
  std::vector<LocalEdge> local;
  local.reserve(edge_count());
  for (LocalIndex v = 0; v < members_.size(); ++v) {
    for (LocalIndex w : out(v)) local.emplace_back(w, v);
  }
  std::sort(local.begin(), local.end());
  return from_local(ego_, members_, std::move(local));
}

Neighborhood Neighborhood::symmetrized() const {
  std::vector<LocalEdge> local;
  local.reserve(edge_count() * 2);
  for (LocalIndex v = 0; v < members_.size(); ++v) {
    for (LocalIndex w : out(v)) {
      local.emplace_back(v, w);
      local.emplace_back(w, v);
    }
  }
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  return from_local(ego_, members_, std::move(local));
}

Neighborhood ego_neighborhood(const FollowGraph& g, NodeId ego) {
  const LocalIndex ego_index = g.require(ego);
  auto followers = g.in_neighbors(ego_index);

  std::vector<NodeId> members;
  members.reserve(followers.size());
  for (LocalIndex f : followers) members.push_back(g.id_of(f));

  // Both adjacency lists and the follower list are ascending in graph index,
  // so each follower's in-neighborhood followees come out of a merge already
  // sorted by local index.
  std::vector<LocalEdge> local;
  for (LocalIndex i = 0; i < followers.size(); ++i) {
    auto targets = g.out_neighbors(followers[i]);
    auto fit = followers.begin();
    for (LocalIndex t : targets) {
      fit = std::lower_bound(fit, followers.end(), t);
      if (fit == followers.end()) break;
      if (*fit == t) local.emplace_back(i, static_cast<LocalIndex>(fit - followers.begin()));
    }
  }
  return Neighborhood::from_local(ego, std::move(members), std::move(local));
}

// ---------------------------------------------------------------------------

std::vector<std::uint32_t> weak_component_labels(const Neighborhood& n) {
  const auto size = static_cast<std::uint32_t>(n.size());
  UnionFind uf(size);
  for (LocalIndex v = 0; v < size; ++v) {
    for (LocalIndex w : n.out(v)) uf.unite(v, w);
  }
  // Scanning in index order assigns labels by smallest member.
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> root_label(size, unset);
  std::vector<std::uint32_t> labels(size);
  std::uint32_t next = 0;
  for (LocalIndex v = 0; v < size; ++v) {
    auto r = uf.find(v);
    if (root_label[r] == unset) root_label[r] = next++;
    labels[v] = root_label[r];
  }
  return labels;
}

std::size_t count_weak_components(const Neighborhood& n) {
  UnionFind uf(n.size());
  for (LocalIndex v = 0; v < n.size(); ++v) {
    for (LocalIndex w : n.out(v)) uf.unite(v, w);
  }
  return uf.set_count();
}

namespace {

// Iterative Tarjan. Returns an SCC id per local index (ids in completion order).
std::vector<std::uint32_t> tarjan_scc(const Neighborhood& n, std::uint32_t& scc_count) {
  constexpr std::uint32_t unvisited = UINT32_MAX;
  const auto size = static_cast<std::uint32_t>(n.size());
  std::vector<std::uint32_t> order(size, unvisited), low(size, 0), comp(size, unvisited);
  std::vector<LocalIndex> stack;
  std::vector<std::pair<LocalIndex, std::size_t>> call;  // (node, next edge position)
  std::uint32_t counter = 0;
  scc_count = 0;

  for (LocalIndex root = 0; root < size; ++root) {
    if (order[root] != unvisited) continue;
    call.emplace_back(root, 0);
    order[root] = low[root] = counter++;
    stack.push_back(root);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto succ = n.out(v);
      if (pos < succ.size()) {
        LocalIndex w = succ[pos++];
        if (order[w] == unvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          call.emplace_back(w, 0);
        } else if (comp[w] == unvisited) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      const LocalIndex done = v;
      call.pop_back();
      if (!call.empty()) {
        LocalIndex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == order[done]) {
        LocalIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = scc_count;
        } while (w != done);
        ++scc_count;
      }
    }
  }
  return comp;
}

Partition blocks_from_labels(const Neighborhood& n, const std::vector<std::uint32_t>& labels,
                             std::uint32_t count) {
  Partition p;
  p.blocks.resize(count);
  for (LocalIndex v = 0; v < n.size(); ++v) p.blocks[labels[v]].push_back(n.id_of(v));
  // Members are visited ascending, so blocks are already sorted internally.
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

}  // namespace

std::size_t count_strong_components(const Neighborhood& n) {
  std::uint32_t count = 0;
  tarjan_scc(n, count);
  return count;
}

Partition weak_components(const Neighborhood& n) {
  auto labels = weak_component_labels(n);
  std::uint32_t count = 0;
  for (auto l : labels) count = std::max(count, l + 1);
  return blocks_from_labels(n, labels, count);
}

Partition strong_components(const Neighborhood& n) {
  std::uint32_t count = 0;
  auto labels = tarjan_scc(n, count);
  return blocks_from_labels(n, labels, count);
}

}  // namespace egodiv
