#include "mwvc/bound.hpp"

#include <algorithm>

namespace mwvc {

namespace {
constexpr std::uint32_t kFree = ~std::uint32_t{0};
constexpr VertexId kNoVertex = ~VertexId{0};
}  // namespace

CliqueBounder::CliqueBounder(const WeightedGraph& g) { rebind(g); }

void CliqueBounder::rebind(const WeightedGraph& g) {
  if (owner_.size() < g.size()) {
    owner_.resize(g.size(), kFree);
    hits_.resize(g.size(), 0);
  }
  // Every edge as (lighter, heavier), lighter endpoint's weight descending.
  // An edge clique is worth its lighter endpoint, so heavy pairs go first.
  order_.clear();
  for (VertexId u : g.live_vertices())
    for (VertexId x : g.neighbors_unchecked(u))
      if (u < x) order_.push_back(g.weight(u) <= g.weight(x) ? Edge{u, x} : Edge{x, u});
  std::sort(order_.begin(), order_.end(), [&](const Edge& a, const Edge& b) {
    const Weight la = g.weight(a.first), lb = g.weight(b.first);
    if (la != lb) return la > lb;
    const Weight ha = g.weight(a.second), hb = g.weight(b.second);
    if (ha != hb) return ha > hb;
    return a < b;
  });
}

void CliqueBounder::greedy(const WeightedGraph& g, std::span<const Edge> source,
                           std::vector<Edge>& live) {
  live.clear();
  for (const auto& [light, heavy] : source) {
    if (!g.alive(light) || !g.alive(heavy)) continue;
    live.push_back({light, heavy});
    if (owner_[light] != kFree || owner_[heavy] != kFree) continue;
    const auto id = static_cast<std::uint32_t>(start_.size());
    start_.push_back(static_cast<std::uint32_t>(members_.size()));
    members_.push_back(heavy);
    members_.push_back(light);
    owner_[heavy] = owner_[light] = id;
    for (VertexId u : g.neighbors_unchecked(light)) ++hits_[u];

    // Extending never lowers w(C) - max w(C). hits_[c] counts non-seed
    // members adjacent to c.
    candidates_.clear();
    for (VertexId u : g.neighbors_unchecked(heavy))
      if (owner_[u] == kFree && hits_[u] == 1) candidates_.push_back(u);
    std::sort(candidates_.begin(), candidates_.end(), [&](VertexId a, VertexId b) {
      const Weight wa = g.weight(a);
      const Weight wb = g.weight(b);
      return wa != wb ? wa > wb : a < b;
    });
    std::size_t size = 2;
    for (VertexId c : candidates_) {
      if (hits_[c] + 1 != size) continue;
      members_.push_back(c);
      owner_[c] = id;
      ++size;
      for (VertexId u : g.neighbors_unchecked(c)) ++hits_[u];
    }
    for (std::size_t i = start_.back() + 1; i < members_.size(); ++i)
      for (VertexId u : g.neighbors_unchecked(members_[i])) hits_[u] = 0;
  }
  start_.push_back(static_cast<std::uint32_t>(members_.size()));
}

VertexId CliqueBounder::heaviest_free(const WeightedGraph& g, VertexId v, VertexId skip) const {
  VertexId best = kNoVertex;
  for (VertexId u : g.neighbors_unchecked(v)) {
    if (owner_[u] != kFree || u == skip) continue;
    if (best == kNoVertex || g.weight(u) > g.weight(best) ||
        (g.weight(u) == g.weight(best) && u < best))
      best = u;
  }
  return best;
}

void CliqueBounder::improve_pairs(const WeightedGraph& g, std::span<const Edge> live) {
  // Pair {a,b} is worth min(wa, wb). Re-pair a and/or b with free
  // neighbors when that is worth strictly more; b may end up free.
  const auto w = [&](VertexId v) { return g.weight(v); };
  const auto is_pair = [&](std::uint32_t c) { return start_[c + 1] - start_[c] == 2; };
  const std::size_t cliques = start_.size() - 1;
  // Greedy leaves no edge between two free vertices; only single re-pairs
  // free a vertex and so open up further moves.
  bool freed = false;
  bool any_freed = false;
  for (int pass = 0; pass < 2; ++pass) {
    if (pass > 0 && !freed) break;
    // Only pairs next to a free vertex can move.
    pending_.clear();
    for (const auto& [x, y] : live) {
      const std::uint32_t ox = owner_[x], oy = owner_[y];
      if ((ox == kFree) == (oy == kFree)) continue;
      const std::uint32_t c = ox == kFree ? oy : ox;
      if (c < cliques && is_pair(c)) pending_.push_back(c);
    }
    if (pending_.empty()) break;
    std::sort(pending_.begin(), pending_.end());
    pending_.erase(std::unique(pending_.begin(), pending_.end()), pending_.end());

    freed = false;
    for (std::uint32_t c : pending_) {
      VertexId& a = members_[start_[c]];
      VertexId& b = members_[start_[c] + 1];
      const Weight now = std::min(w(a), w(b));
      const VertexId xa = heaviest_free(g, a, kNoVertex);
      const VertexId xb = heaviest_free(g, b, kNoVertex);
      Weight best = now;
      int move = 0;
      if (xa != kNoVertex && std::min(w(a), w(xa)) > best) best = std::min(w(a), w(xa)), move = 1;
      if (xb != kNoVertex && std::min(w(b), w(xb)) > best) best = std::min(w(b), w(xb)), move = 2;
      VertexId ya = kNoVertex;
      VertexId yb = kNoVertex;
      if (xa != kNoVertex && xb != kNoVertex) {
        ya = xa;
        yb = xb;
        if (xa == xb) {
          const VertexId alt_a = heaviest_free(g, a, xa);
          const VertexId alt_b = heaviest_free(g, b, xb);
          const Weight via_a = alt_a == kNoVertex ? -1 : std::min(w(a), w(alt_a)) + std::min(w(b), w(xb));
          const Weight via_b = alt_b == kNoVertex ? -1 : std::min(w(a), w(xa)) + std::min(w(b), w(alt_b));
          if (via_a < 0 && via_b < 0) ya = yb = kNoVertex;
          else if (via_a >= via_b) ya = alt_a;
          else yb = alt_b;
        }
        if (ya != kNoVertex && std::min(w(a), w(ya)) + std::min(w(b), w(yb)) > best) move = 3;
      }
      if (move == 0) continue;
      if (move != 3) freed = any_freed = true;
      if (move == 1) {
        owner_[b] = kFree;
        b = xa;
        owner_[xa] = c;
      } else if (move == 2) {
        owner_[a] = kFree;
        a = xb;
        owner_[xb] = c;
      } else {
        const VertexId old_b = b;
        b = ya;
        owner_[ya] = c;
        // old_b and yb become a new pair at the end.
        const auto id = static_cast<std::uint32_t>(start_.size() - 1);
        members_.push_back(old_b);
        members_.push_back(yb);
        start_.push_back(static_cast<std::uint32_t>(members_.size()));
        owner_[old_b] = owner_[yb] = id;
      }
    }
  }
  if (!any_freed) return;
  // Freed vertices may now pair up with each other.
  for (const auto& [light, heavy] : live) {
    if (owner_[light] != kFree || owner_[heavy] != kFree) continue;
    owner_[light] = owner_[heavy] = static_cast<std::uint32_t>(start_.size() - 1);
    members_.push_back(heavy);
    members_.push_back(light);
    start_.push_back(static_cast<std::uint32_t>(members_.size()));
  }
}

template <class OnClique>
void CliqueBounder::for_each_clique(const WeightedGraph& g, std::size_t level,
                                    OnClique&& on_clique) {
  expects(g.size() <= owner_.size(), "CliqueBounder: not the graph it was built for");
  if (levels_.size() <= level) levels_.resize(level + 1);
  const std::span<const Edge> source =
      level == 0 ? std::span<const Edge>(order_) : std::span<const Edge>(levels_[level - 1]);
  std::vector<Edge>& live = levels_[level];
  members_.clear();
  start_.clear();
  greedy(g, source, live);
  improve_pairs(g, live);

  for (std::size_t c = 0; c + 1 < start_.size(); ++c) {
    clique_.assign(members_.begin() + start_[c], members_.begin() + start_[c + 1]);
    on_clique(clique_);
  }
  for (VertexId v : g.live_vertices()) {
    if (owner_[v] != kFree) {
      owner_[v] = kFree;
      continue;
    }
    clique_.assign(1, v);
    on_clique(clique_);
  }
}

Weight CliqueBounder::lower_bound(const WeightedGraph& g, std::size_t level) {
  Weight bound = 0;
  for_each_clique(g, level, [&](const std::vector<VertexId>& clique) {
    Weight sum = 0;
    Weight heaviest = 0;
    for (VertexId v : clique) {
      sum += g.weight(v);
      heaviest = std::max(heaviest, g.weight(v));
    }
    bound += sum - heaviest;
  });
  return bound;
}

void CliqueBounder::lower_bound_by_label(const WeightedGraph& g, std::size_t level,
                                         std::span<const std::uint32_t> label,
                                         std::span<Weight> bounds) {
  for_each_clique(g, level, [&](const std::vector<VertexId>& clique) {
    if (clique.size() < 2) return;
    Weight sum = 0;
    Weight heaviest = 0;
    for (VertexId v : clique) {
      sum += g.weight(v);
      heaviest = std::max(heaviest, g.weight(v));
    }
    bounds[label[clique.front()]] += sum - heaviest;
  });
}

CliquePartition CliqueBounder::partition(const WeightedGraph& g) {
  CliquePartition out;
  for_each_clique(g, 0, [&](const std::vector<VertexId>& clique) { out.cliques.push_back(clique); });
  return out;
}

CliquePartition clique_partition(const WeightedGraph& g) {
  CliqueBounder bounder(g);
  return bounder.partition(g);
}

Weight lower_bound(const WeightedGraph& g) {
  CliqueBounder bounder(g);
  return bounder.lower_bound(g);
}

}  // namespace mwvc
