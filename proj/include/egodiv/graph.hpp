#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace egodiv {

using NodeId = std::uint64_t;

/// Dense position of a node inside one container (graph or neighborhood).
/// Dense order always follows NodeId order.
using LocalIndex = std::uint32_t;

/// `from` follows `to`.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable follow graph with sorted, deduplicated adjacency in both
/// directions. Safe to share between threads once built.
class FollowGraph {
 public:
  FollowGraph() = default;

  /// Collapses duplicate edges. Throws InputError on a self-loop.
  static FollowGraph from_edge_list(std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  /// All node ids, ascending.
  std::span<const NodeId> nodes() const noexcept { return ids_; }
  bool contains(NodeId id) const noexcept { return index_of(id).has_value(); }

  std::optional<LocalIndex> index_of(NodeId id) const noexcept;
  /// Like index_of but throws NotFoundError.
  LocalIndex require(NodeId id) const;
  NodeId id_of(LocalIndex index) const noexcept { return ids_[index]; }

  /// Dense adjacency; targets ascending.
  std::span<const LocalIndex> out_neighbors(LocalIndex v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const LocalIndex> in_neighbors(LocalIndex v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }

  std::vector<NodeId> followees(NodeId id) const;
  std::vector<NodeId> followers(NodeId id) const;
  std::size_t indegree(NodeId id) const;
  std::size_t outdegree(NodeId id) const;
  bool has_edge(NodeId from, NodeId to) const noexcept;

  /// Every edge, ordered by (from, to).
  std::vector<Edge> edges() const;

 private:
  std::vector<NodeId> ids_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<LocalIndex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<LocalIndex> in_sources_;
};

/// Induced directed subgraph on one ego's followers. The ego and every edge
/// touching it are excluded.
class Neighborhood {
 public:
  Neighborhood() = default;

  /// Builds from explicit parts. Members are sorted and deduplicated; throws
  /// InputError if an edge endpoint is not a member, an edge is a self-loop,
  /// or the ego is listed as a member.
  Neighborhood(NodeId ego, std::vector<NodeId> members, std::span<const Edge> edges);

  NodeId ego() const noexcept { return ego_; }
  std::span<const NodeId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  NodeId id_of(LocalIndex v) const noexcept { return members_[v]; }
  std::optional<LocalIndex> index_of(NodeId id) const noexcept;

  std::span<const LocalIndex> out(LocalIndex v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const LocalIndex> in(LocalIndex v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t outdegree(LocalIndex v) const noexcept { return out(v).size(); }
  std::size_t indegree(LocalIndex v) const noexcept { return in(v).size(); }

  /// Edges ordered by (from, to).
  std::vector<Edge> edges() const;

  /// Subgraph induced on the members whose `keep` flag is set.
  Neighborhood induced(const std::vector<bool>& keep) const;

  /// Same members, every edge reversed.
  Neighborhood reversed() const;

  /// Same members, each edge present in both directions.
  Neighborhood symmetrized() const;

 private:
  friend Neighborhood ego_neighborhood(const FollowGraph& g, NodeId ego);

  // Local edges (from, to) must be sorted and unique.
  static Neighborhood from_local(NodeId ego, std::vector<NodeId> members,
                                 std::vector<std::pair<LocalIndex, LocalIndex>> local_edges);

  void build(std::vector<std::pair<LocalIndex, LocalIndex>> local_edges);

  NodeId ego_ = 0;
  std::vector<NodeId> members_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<LocalIndex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<LocalIndex> in_sources_;
};

/// Throws NotFoundError for an unknown ego.
Neighborhood ego_neighborhood(const FollowGraph& g, NodeId ego);

/// Disjoint blocks covering a node set. Each block is sorted ascending and
/// blocks are ordered by their smallest member.
struct Partition {
  std::vector<std::vector<NodeId>> blocks;

  std::size_t size() const noexcept { return blocks.size(); }
  bool operator==(const Partition&) const = default;
};

Partition weak_components(const Neighborhood& n);
Partition strong_components(const Neighborhood& n);

/// Component counts without materializing blocks.
std::size_t count_weak_components(const Neighborhood& n);
std::size_t count_strong_components(const Neighborhood& n);

/// Weak component label per local index; labels are dense and ordered by the
/// smallest member of each component.
std::vector<std::uint32_t> weak_component_labels(const Neighborhood& n);

}  // namespace egodiv
