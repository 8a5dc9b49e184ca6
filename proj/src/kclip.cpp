#include "egodiv/kclip.hpp"

#include <queue>
#include <string>

#include "egodiv/errors.hpp"
#include "egodiv/union_find.hpp"

namespace egodiv {

std::string_view to_string(RemovalMode mode) noexcept {
  switch (mode) {
    case RemovalMode::single: return "single";
    case RemovalMode::multiple: return "multiple";
    case RemovalMode::adaptive: return "adaptive";
  }
  return "single";
}

RemovalMode parse_removal_mode(std::string_view name) {
  if (name == "single") return RemovalMode::single;
  if (name == "multiple") return RemovalMode::multiple;
  if (name == "adaptive") return RemovalMode::adaptive;
  throw InputError("unknown removal mode '" + std::string(name) + "'");
}

void ClipConfig::validate() const {
  if (k < 1) throw InputError("k must be >= 1, got " + std::to_string(k));
  if (adaptive_threshold < 1) throw InputError("adaptive threshold must be >= 1");
}

std::size_t ClipTrace::removed_count() const noexcept {
  std::size_t total = 0;
  for (const auto& step : removed) total += step.nodes.size();
  return total;
}

namespace {

struct Candidate {
  std::size_t out;
  std::size_t total;
  LocalIndex node;
};

// Heap top is the next node to remove: larger outdegree, then larger total
// degree, then smaller index (= smaller NodeId).
struct RemovedLater {
  bool operator()(const Candidate& a, const Candidate& b) const noexcept {
    if (a.out != b.out) return a.out < b.out;
    if (a.total != b.total) return a.total < b.total;
    return a.node > b.node;
  }
};

class Peeler {
 public:
  Peeler(const Neighborhood& n, std::size_t k) : n_(n), k_(k), alive_(n.size(), true) {
    out_.resize(n.size());
    in_.resize(n.size());
    for (LocalIndex v = 0; v < n.size(); ++v) {
      out_[v] = n.outdegree(v);
      in_[v] = n.indegree(v);
      offer(v);
    }
  }

  // Drops stale heap entries; returns false when no node has outdegree >= k.
  bool settle() {
    while (!heap_.empty()) {
      const Candidate& top = heap_.top();
      if (alive_[top.node] && out_[top.node] == top.out && in_[top.node] + out_[top.node] == top.total) {
        return true;
      }
      heap_.pop();
    }
    return false;
  }

  std::size_t max_outdegree() const { return heap_.top().out; }

  Candidate pop() {
    Candidate c = heap_.top();
    heap_.pop();
    return c;
  }

  void remove(LocalIndex v) {
    alive_[v] = false;
    for (LocalIndex u : n_.in(v)) {
      if (!alive_[u]) continue;
      --out_[u];
      offer(u);
    }
    for (LocalIndex w : n_.out(v)) {
      if (!alive_[w]) continue;
      --in_[w];
      offer(w);
    }
  }

  bool alive(LocalIndex v) const { return alive_[v]; }
  std::size_t outdegree(LocalIndex v) const { return out_[v]; }
  const std::vector<bool>& alive_flags() const { return alive_; }

  // Nodes lying in weak components of size >= 2 among survivors.
  std::size_t clustered_nodes() const {
    UnionFind uf(n_.size());
    for (LocalIndex v = 0; v < n_.size(); ++v) {
      if (!alive_[v]) continue;
      for (LocalIndex w : n_.out(v)) {
        if (alive_[w]) uf.unite(v, w);
      }
    }
    std::size_t count = 0;
    for (LocalIndex v = 0; v < n_.size(); ++v) {
      if (alive_[v] && uf.set_size(v) >= 2) ++count;
    }
    return count;
  }

 private:
  void offer(LocalIndex v) {
    if (out_[v] >= k_) heap_.push({out_[v], out_[v] + in_[v], v});
  }

  const Neighborhood& n_;
  std::size_t k_;
  std::vector<bool> alive_;
  std::vector<std::size_t> out_;
  std::vector<std::size_t> in_;
  std::priority_queue<Candidate, std::vector<Candidate>, RemovedLater> heap_;
};

}  // namespace

ClipTrace k_clip_decompose(const Neighborhood& n, const ClipConfig& cfg) {
  cfg.validate();
  ClipTrace trace;
  trace.mode = cfg.mode;
  trace.k = cfg.k;

  Peeler peeler(n, static_cast<std::size_t>(cfg.k));

  // Clustered-node count only shrinks as nodes are removed, so adaptive mode
  // never returns to batch removal after falling back to single steps.
  bool batch = cfg.mode == RemovalMode::multiple;
  if (cfg.mode == RemovalMode::adaptive) batch = peeler.clustered_nodes() > cfg.adaptive_threshold;

  while (peeler.settle()) {
    RemovalStep step;
    step.index = trace.removed.size();
    step.mode = batch ? RemovalMode::multiple : RemovalMode::single;

    if (!batch) {
      Candidate c = peeler.pop();
      step.nodes.push_back(n.id_of(c.node));
      step.outdegrees.push_back(c.out);
      peeler.remove(c.node);
    } else {
      const std::size_t level = peeler.max_outdegree();
      std::vector<LocalIndex> level_nodes;
      while (peeler.settle() && peeler.max_outdegree() == level) level_nodes.push_back(peeler.pop().node);
      for (LocalIndex v : level_nodes) {
        if (peeler.outdegree(v) < level) continue;
        step.nodes.push_back(n.id_of(v));
        step.outdegrees.push_back(peeler.outdegree(v));
        peeler.remove(v);
      }
    }
    trace.removed.push_back(std::move(step));

    if (cfg.mode == RemovalMode::adaptive && batch) {
      batch = peeler.clustered_nodes() > cfg.adaptive_threshold;
    }
  }

  trace.remaining = n.induced(peeler.alive_flags());
  trace.d_k = count_weak_components(trace.remaining);
  return trace;
}

std::size_t k_clip_diversity(const Neighborhood& n, const ClipConfig& cfg) {
  if (n.size() < 2) {
    cfg.validate();
    return n.size();
  }
  return k_clip_decompose(n, cfg).d_k;
}

}  // namespace egodiv
