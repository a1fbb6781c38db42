#include "mwvc/branch.hpp"

#include <algorithm>
#include <limits>

namespace mwvc {

std::string_view heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::kMaxDegree: return "h1";
    case Heuristic::kRandom: return "h2";
    case Heuristic::kMinWeight: return "h3";
    case Heuristic::kMaxDegreeRatio: return "h4";
  }
  return "?";
}

std::optional<Heuristic> parse_heuristic(std::string_view name) {
  if (name == "h1" || name == "H1") return Heuristic::kMaxDegree;
  if (name == "h2" || name == "H2") return Heuristic::kRandom;
  if (name == "h3" || name == "H3") return Heuristic::kMinWeight;
  if (name == "h4" || name == "H4") return Heuristic::kMaxDegreeRatio;
  return std::nullopt;
}

namespace {

std::size_t count_internal_edges(const WeightedGraph& g, VertexId v, VertexMarks& marks) {
  marks.clear();
  const auto nb = g.neighbors(v);
  for (VertexId u : nb) marks.mark(u);
  std::size_t twice = 0;
  for (VertexId u : nb)
    for (VertexId x : g.neighbors_unchecked(u))
      if (marks.marked(x)) ++twice;
  return twice / 2;
}

}  // namespace

std::size_t neighborhood_internal_edges(const WeightedGraph& g, VertexId v) {
  VertexMarks marks(g.size());
  return count_internal_edges(g, v, marks);
}

BranchSelector::BranchSelector(HeuristicChoice choice, std::size_t capacity)
    : choice_(choice), marks_(capacity) {
  if (choice.kind == Heuristic::kRandom) rng_.emplace(choice.seed);
}

void BranchSelector::reseed(std::uint64_t seed) {
  choice_.seed = seed;
  if (choice_.kind == Heuristic::kRandom) rng_.emplace(seed);
}

std::size_t BranchSelector::internal_edges(const WeightedGraph& g, VertexId v) {
  return count_internal_edges(g, v, marks_);
}

int BranchSelector::compare(const WeightedGraph& g, VertexId a, VertexId b) const {
  const std::uint64_t da = g.degree_unchecked(a);
  const std::uint64_t db = g.degree_unchecked(b);
  const auto wa = static_cast<std::uint64_t>(g.weight(a));
  const auto wb = static_cast<std::uint64_t>(g.weight(b));
  switch (choice_.kind) {
    case Heuristic::kMaxDegree:
      return da == db ? 0 : (da > db ? -1 : 1);
    case Heuristic::kMinWeight:
      return wa == wb ? 0 : (wa < wb ? -1 : 1);
    case Heuristic::kMaxDegreeRatio: {
      // A zero weight is an infinite ratio; among those, larger degree wins.
      if (wa == 0 || wb == 0) {
        if (wa != 0) return 1;
        if (wb != 0) return -1;
        return da == db ? 0 : (da > db ? -1 : 1);
      }
      // Degrees and weights are below 2^32, so the products fit 64 bits.
      const std::uint64_t lhs = da * wb;
      const std::uint64_t rhs = db * wa;
      return lhs == rhs ? 0 : (lhs > rhs ? -1 : 1);
    }
    case Heuristic::kRandom:
      break;
  }
  return 0;
}

VertexId BranchSelector::select(const WeightedGraph& g) {
  expects(g.num_edges() > 0, "select: graph has no edges");

  if (choice_.kind == Heuristic::kRandom) {
    ties_.clear();
    for (VertexId v = 0; v < g.size(); ++v)
      if (g.alive(v) && g.degree_unchecked(v) > 0) ties_.push_back(v);
    return ties_[uniform_below(*rng_, ties_.size())];
  }

  ties_.clear();
  for (VertexId v : g.live_vertices()) {
    if (g.degree_unchecked(v) == 0) continue;
    if (ties_.empty()) {
      ties_.push_back(v);
      continue;
    }
    const int c = compare(g, v, ties_.front());
    if (c < 0) {
      ties_.assign(1, v);
    } else if (c == 0) {
      ties_.push_back(v);
    }
  }
  if (ties_.size() == 1) return ties_.front();

  VertexId best = ties_.front();
  std::size_t best_internal = internal_edges(g, best);
  for (std::size_t i = 1; i < ties_.size(); ++i) {
    const VertexId v = ties_[i];
    const std::size_t internal = internal_edges(g, v);
    if (internal < best_internal || (internal == best_internal && v < best)) {
      best = v;
      best_internal = internal;
    }
  }
  return best;
}

VertexId select_vertex(const WeightedGraph& g, HeuristicChoice choice) {
  BranchSelector selector(choice, g.size());
  return selector.select(g);
}

}  // namespace mwvc
