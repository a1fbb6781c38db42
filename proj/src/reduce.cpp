#include "mwvc/reduce.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <unordered_set>

namespace mwvc {

namespace {

using PairKey = std::uint64_t;

PairKey pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<PairKey>(a) << 32) | b;
}
VertexId pair_first(PairKey k) { return static_cast<VertexId>(k >> 32); }
VertexId pair_second(PairKey k) { return static_cast<VertexId>(k & 0xffffffffu); }

PairKey neighbor_pair(const WeightedGraph& g, VertexId v) {
  const auto nb = g.neighbors_unchecked(v);
  return pair_key(nb[0], nb[1]);
}

std::vector<VertexId> sorted_neighbors(const WeightedGraph& g, VertexId v) {
  const auto nb = g.neighbors_unchecked(v);
  std::vector<VertexId> out(nb.begin(), nb.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> degree1_neighbors(const WeightedGraph& g, VertexId v) {
  std::vector<VertexId> out;
  for (VertexId u : g.neighbors_unchecked(v))
    if (g.degree_unchecked(u) == 1) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

// Rule bodies shared by the sweep reference and the incremental reducer.
// `remove` performs (and possibly records) a single vertex removal. Each
// returns the number of vertices removed.

template <class Remove>
std::size_t apply_adjacent(WeightedGraph& g, PartialCover& cover, VertexId v, Remove&& remove) {
  const auto nb = sorted_neighbors(g, v);
  for (VertexId u : nb) {
    cover.add(g, u);
    remove(u);
  }
  remove(v);
  return nb.size() + 1;
}

template <class Remove>
std::size_t apply_degree1(WeightedGraph& g, PartialCover& cover, VertexId v, Remove&& remove) {
  const auto leaves = degree1_neighbors(g, v);
  cover.add(g, v);
  remove(v);
  for (VertexId u : leaves) remove(u);
  return leaves.size() + 1;
}

template <class Remove>
std::size_t apply_degree2(WeightedGraph& g, PartialCover& cover, VertexId a, VertexId b,
                          const std::vector<VertexId>& group, Remove&& remove) {
  cover.add(g, a);
  cover.add(g, b);
  remove(a);
  remove(b);
  for (VertexId x : group) remove(x);
  return group.size() + 2;
}

bool degree2_group_qualifies(const WeightedGraph& g, VertexId a, VertexId b,
                             const std::vector<VertexId>& group) {
  if (group.empty()) return false;
  return g.weight(a) + g.weight(b) <= weight_of(g, group);
}

// Smallest neighbor-pair key strictly above `after` among live degree-2
// vertices.
std::optional<PairKey> next_pair_after(const WeightedGraph& g, std::optional<PairKey> after) {
  std::optional<PairKey> best;
  for (VertexId v : g.live_vertices()) {
    if (g.degree_unchecked(v) != 2) continue;
    const PairKey k = neighbor_pair(g, v);
    if (after && k <= *after) continue;
    if (!best || k < *best) best = k;
  }
  return best;
}

template <class Applies, class Apply>
std::size_t sweep_vertices(WeightedGraph& g, Applies&& applies, Apply&& apply) {
  std::size_t removed = 0;
  bool applied = true;
  while (applied) {
    applied = false;
    for (VertexId v = 0; v < g.size(); ++v) {
      if (g.alive(v) && applies(g, v)) {
        removed += apply(v);
        applied = true;
      }
    }
  }
  return removed;
}

}  // namespace

bool degree0_applies(const WeightedGraph& g, VertexId v) { return g.degree(v) == 0; }

bool adjacent_applies(const WeightedGraph& g, VertexId v) {
  return g.degree(v) > 0 && g.weight(v) >= g.neighborhood_weight(v);
}

bool degree1_applies(const WeightedGraph& g, VertexId v) {
  Weight leaves = 0;
  bool any = false;
  for (VertexId u : g.neighbors(v)) {
    if (g.degree_unchecked(u) == 1) {
      leaves += g.weight(u);
      any = true;
    }
  }
  // An empty N_1(v) would make the inequality vacuous; there are no edges to
  // justify taking v.
  return any && g.weight(v) <= leaves;
}

bool zero_weight_applies(const WeightedGraph& g, VertexId v) {
  return g.weight(v) == 0 && g.degree(v) > 0;
}

std::vector<VertexId> degree2_group(const WeightedGraph& g, VertexId a, VertexId b) {
  std::vector<VertexId> group;
  if (a == b || !g.contains(a) || !g.contains(b)) return group;
  const VertexId scan = g.degree_unchecked(a) <= g.degree_unchecked(b) ? a : b;
  const VertexId other = scan == a ? b : a;
  for (VertexId x : g.neighbors_unchecked(scan)) {
    if (g.degree_unchecked(x) != 2) continue;
    const auto nb = g.neighbors_unchecked(x);
    if (nb[0] == other || nb[1] == other) group.push_back(x);
  }
  std::sort(group.begin(), group.end());
  return group;
}

std::size_t rule_degree0(WeightedGraph& g) {
  return sweep_vertices(g, degree0_applies, [&](VertexId v) {
    g.remove_vertex(v);
    return std::size_t{1};
  });
}

std::size_t rule_adjacent(WeightedGraph& g, PartialCover& cover) {
  auto remove = [&](VertexId u) { g.remove_vertex(u); };
  return sweep_vertices(g, adjacent_applies,
                        [&](VertexId v) { return apply_adjacent(g, cover, v, remove); });
}

std::size_t rule_degree1(WeightedGraph& g, PartialCover& cover) {
  auto remove = [&](VertexId u) { g.remove_vertex(u); };
  return sweep_vertices(g, degree1_applies,
                        [&](VertexId v) { return apply_degree1(g, cover, v, remove); });
}

std::size_t rule_zero_weight(WeightedGraph& g, PartialCover& cover) {
  return sweep_vertices(g, zero_weight_applies, [&](VertexId v) {
    cover.add(g, v);
    g.remove_vertex(v);
    return std::size_t{1};
  });
}

std::size_t rule_degree2(WeightedGraph& g, PartialCover& cover) {
  auto remove = [&](VertexId u) { g.remove_vertex(u); };
  std::size_t removed = 0;
  bool applied = true;
  while (applied) {
    applied = false;
    std::optional<PairKey> position;
    while (auto key = next_pair_after(g, position)) {
      position = key;
      const VertexId a = pair_first(*key);
      const VertexId b = pair_second(*key);
      const auto group = degree2_group(g, a, b);
      if (degree2_group_qualifies(g, a, b, group)) {
        removed += apply_degree2(g, cover, a, b, group, remove);
        applied = true;
      }
    }
  }
  return removed;
}

ReductionOutcome reduce_reference(WeightedGraph& g, const ReduceOptions& options) {
  ReductionOutcome out;
  auto& counts = out.removed_by_rule;
  std::size_t before = 0;
  do {
    before = g.num_alive();
    ++out.passes;
    counts.degree0 += rule_degree0(g);
    if (options.zero_weight_rule) counts.zero_weight += rule_zero_weight(g, out.partial_cover);
    counts.adjacent += rule_adjacent(g, out.partial_cover);
    counts.degree1 += rule_degree1(g, out.partial_cover);
    counts.degree2 += rule_degree2(g, out.partial_cover);
  } while (g.num_alive() != before);
  return out;
}

namespace {

// Replays the sweep discipline of reduce_reference() but only re-inspects
// vertices (or neighbor pairs) whose rule predicate may have changed since
// they were last found inapplicable. A predicate can only start holding after
// a nearby removal:
//   degree-0 / adjacent at y   -> a neighbor of y was removed
//   degree-1 at z              -> some neighbor y of z dropped to degree 1
//   degree-2 for pair {a, b}   -> some y dropped to degree 2 with N(y) = {a, b}
//   zero-weight                -> never (degrees only fall)
// A dirty item above the current sweep position joins the running sweep;
// anything at or below it waits for the next sweep, exactly as a full
// ascending rescan would see it.
class IncrementalReducer {
 public:
  IncrementalReducer(WeightedGraph& g, const ReduceOptions& options)
      : g_(g), options_(options) {
    const std::size_t n = g.size();
    for (auto& p : pending_) {
      p.flag.assign(n, 0);
      for (VertexId v : g.live_vertices()) push_pending(p, v);
    }
    in_heap_.assign(n, 0);
    for (VertexId v : g.live_vertices())
      if (g.degree_unchecked(v) == 2) pending_pairs_.insert(neighbor_pair(g, v));
  }

  ReductionOutcome run() {
    ReductionOutcome out;
    auto& counts = out.removed_by_rule;
    cover_ = &out.partial_cover;
    std::size_t before = 0;
    do {
      before = g_.num_alive();
      ++out.passes;
      counts.degree0 += run_vertex_rule(kDegree0);
      if (options_.zero_weight_rule) counts.zero_weight += run_vertex_rule(kZeroWeight);
      counts.adjacent += run_vertex_rule(kAdjacent);
      counts.degree1 += run_vertex_rule(kDegree1);
      counts.degree2 += run_pair_rule();
    } while (g_.num_alive() != before);
    return out;
  }

 private:
  enum VertexRule { kDegree0, kZeroWeight, kAdjacent, kDegree1, kNumVertexRules };
  static constexpr int kPairRule = kNumVertexRules;
  static constexpr int kIdle = -1;

  struct Pending {
    std::vector<VertexId> list;
    std::vector<std::uint8_t> flag;
  };

  static void push_pending(Pending& p, VertexId v) {
    if (!p.flag[v]) {
      p.flag[v] = 1;
      p.list.push_back(v);
    }
  }

  bool applies(int rule, VertexId v) const {
    switch (rule) {
      case kDegree0: return degree0_applies(g_, v);
      case kZeroWeight: return zero_weight_applies(g_, v);
      case kAdjacent: return adjacent_applies(g_, v);
      default: return degree1_applies(g_, v);
    }
  }

  void mark_vertex(int rule, VertexId v) {
    if (rule == active_ && static_cast<std::int64_t>(v) > position_) {
      if (!in_heap_[v]) {
        in_heap_[v] = 1;
        heap_.push(v);
      }
      return;
    }
    push_pending(pending_[rule], v);
  }

  void mark_pair(PairKey key) {
    if (active_ == kPairRule && pair_position_ && key > *pair_position_) {
      if (pair_in_heap_.insert(key).second) pair_heap_.push(key);
      return;
    }
    pending_pairs_.insert(key);
  }

  void remove(VertexId x) {
    g_.remove_vertex(x);
    // x's own slice is frozen at its neighbors as of removal.
    for (VertexId y : g_.neighbors_unchecked(x)) {
      mark_vertex(kDegree0, y);
      mark_vertex(kAdjacent, y);
      const std::size_t d = g_.degree_unchecked(y);
      if (d == 1) mark_vertex(kDegree1, g_.neighbors_unchecked(y)[0]);
      if (d == 2) mark_pair(neighbor_pair(g_, y));
    }
  }

  std::size_t apply(int rule, VertexId v) {
    auto rm = [this](VertexId u) { remove(u); };
    switch (rule) {
      case kDegree0:
        remove(v);
        return 1;
      case kZeroWeight:
        cover_->add(g_, v);
        remove(v);
        return 1;
      case kAdjacent: return apply_adjacent(g_, *cover_, v, rm);
      default: return apply_degree1(g_, *cover_, v, rm);
    }
  }

  std::size_t run_vertex_rule(int rule) {
    std::size_t removed = 0;
    Pending& p = pending_[rule];
    active_ = rule;
    while (!p.list.empty()) {
      for (VertexId v : p.list) {
        p.flag[v] = 0;
        in_heap_[v] = 1;
        heap_.push(v);
      }
      p.list.clear();
      position_ = -1;
      while (!heap_.empty()) {
        const VertexId v = heap_.top();
        heap_.pop();
        in_heap_[v] = 0;
        position_ = v;
        if (g_.alive(v) && applies(rule, v)) removed += apply(rule, v);
      }
    }
    active_ = kIdle;
    return removed;
  }

  std::size_t run_pair_rule() {
    std::size_t removed = 0;
    auto rm = [this](VertexId u) { remove(u); };
    active_ = kPairRule;
    while (!pending_pairs_.empty()) {
      for (PairKey k : pending_pairs_)
        if (pair_in_heap_.insert(k).second) pair_heap_.push(k);
      pending_pairs_.clear();
      pair_position_.reset();
      while (!pair_heap_.empty()) {
        const PairKey k = pair_heap_.top();
        pair_heap_.pop();
        pair_in_heap_.erase(k);
        pair_position_ = k;
        const VertexId a = pair_first(k);
        const VertexId b = pair_second(k);
        const auto group = degree2_group(g_, a, b);
        if (degree2_group_qualifies(g_, a, b, group))
          removed += apply_degree2(g_, *cover_, a, b, group, rm);
      }
    }
    pair_position_.reset();
    active_ = kIdle;
    return removed;
  }

  WeightedGraph& g_;
  ReduceOptions options_;
  PartialCover* cover_ = nullptr;

  Pending pending_[kNumVertexRules];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> heap_;
  std::vector<std::uint8_t> in_heap_;
  int active_ = kIdle;
  std::int64_t position_ = -1;

  std::unordered_set<PairKey> pending_pairs_;
  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<>> pair_heap_;
  std::unordered_set<PairKey> pair_in_heap_;
  std::optional<PairKey> pair_position_;
};

}  // namespace

ReductionOutcome reduce(WeightedGraph& g, const ReduceOptions& options) {
  IncrementalReducer reducer(g, options);
  return reducer.run();
}

LocalReducer::LocalReducer(std::size_t capacity, const ReduceOptions& options)
    : options_(options), queued_(capacity) {}

void LocalReducer::mark(VertexId v) {
  if (queued_.marked(v)) return;
  queued_.mark(v);
  queue_.push_back(v);
}

void LocalReducer::touch(const WeightedGraph& g, VertexId removed) {
  for (VertexId u : g.neighbors_unchecked(removed)) {
    if (!g.alive(u)) continue;
    mark(u);
    for (VertexId x : g.neighbors_unchecked(u)) mark(x);
  }
}

void LocalReducer::run(WeightedGraph& g, std::span<const VertexId> removed,
                       std::vector<VertexId>& forced) {
  queued_.clear();
  queue_.clear();
  for (VertexId x : removed) touch(g, x);

  PartialCover cover;
  auto remove = [&](VertexId u) {
    g.remove_vertex(u);
    touch(g, u);
  };
  // A vertex may be re-marked after it is popped, so marks are cleared on pop.
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId v = queue_[head];
    queued_.clear_one(v);
    if (!g.alive(v)) continue;
    const std::size_t d = g.degree_unchecked(v);
    if (d == 0) {
      g.remove_vertex(v);
    } else if (options_.zero_weight_rule && g.weight(v) == 0) {
      cover.add(g, v);
      remove(v);
    } else if (g.weight(v) >= g.neighborhood_weight(v)) {
      apply_adjacent(g, cover, v, remove);
    } else if (degree1_applies(g, v)) {
      apply_degree1(g, cover, v, remove);
    } else if (d == 2) {
      const auto nb = g.neighbors_unchecked(v);
      const VertexId a = std::min(nb[0], nb[1]);
      const VertexId b = std::max(nb[0], nb[1]);
      scratch_ = degree2_group(g, a, b);
      if (degree2_group_qualifies(g, a, b, scratch_)) apply_degree2(g, cover, a, b, scratch_, remove);
    }
  }
  forced.insert(forced.end(), cover.members.begin(), cover.members.end());
}

std::optional<std::string> find_applicable_rule(const WeightedGraph& g,
                                                const ReduceOptions& options) {
  for (VertexId v : g.live_vertices_sorted()) {
    const std::string at = " at vertex " + std::to_string(v);
    if (degree0_applies(g, v)) return "degree-0" + at;
    if (options.zero_weight_rule && zero_weight_applies(g, v)) return "zero-weight" + at;
    if (adjacent_applies(g, v)) return "adjacent" + at;
    if (degree1_applies(g, v)) return "degree-1" + at;
  }
  for (VertexId v : g.live_vertices_sorted()) {
    if (g.degree_unchecked(v) != 2) continue;
    const PairKey k = neighbor_pair(g, v);
    const VertexId a = pair_first(k);
    const VertexId b = pair_second(k);
    if (degree2_group_qualifies(g, a, b, degree2_group(g, a, b)))
      return "degree-2 for pair (" + std::to_string(a) + ", " + std::to_string(b) + ")";
  }
  return std::nullopt;
}

}  // namespace mwvc
