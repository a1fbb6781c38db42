#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mwvc/graph.hpp"
#include "mwvc/random.hpp"

namespace mwvc {

enum class Heuristic {
  kMaxDegree,       // H1
  kRandom,          // H2
  kMinWeight,       // H3
  kMaxDegreeRatio,  // H4: degree / weight, zero weight ranks highest
};

struct HeuristicChoice {
  Heuristic kind = Heuristic::kMaxDegree;
  std::uint64_t seed = 0;  // H2 only
};

std::string_view heuristic_name(Heuristic h);
std::optional<Heuristic> parse_heuristic(std::string_view name);

/// Number of edges with both endpoints in N(v).
std::size_t neighborhood_internal_edges(const WeightedGraph& g, VertexId v);

/// Picks branching vertices for one search. Holds the H2 random stream and
/// scratch marks, so a selector belongs to a single search thread.
///
/// H1/H3/H4 ties go to the vertex with the fewest edges inside its
/// neighborhood, then to the smaller id. H2 draws uniformly among live
/// vertices with at least one edge.
class BranchSelector {
 public:
  BranchSelector(HeuristicChoice choice, std::size_t capacity);

  /// Requires at least one live edge.
  VertexId select(const WeightedGraph& g);
  /// Restarts the H2 stream from `seed`.
  void reseed(std::uint64_t seed);

 private:
  /// <0 if a ranks above b, 0 on a tie, >0 otherwise.
  int compare(const WeightedGraph& g, VertexId a, VertexId b) const;
  std::size_t internal_edges(const WeightedGraph& g, VertexId v);

  HeuristicChoice choice_;
  std::optional<std::mt19937_64> rng_;  // H2 only
  VertexMarks marks_;
  std::vector<VertexId> ties_;
};

/// One-shot selection; for H2 this is the first draw of the seeded stream.
VertexId select_vertex(const WeightedGraph& g, HeuristicChoice choice);

}  // namespace mwvc
