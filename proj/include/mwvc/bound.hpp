#pragma once

#include <span>
#include <vector>

#include "mwvc/graph.hpp"

namespace mwvc {

struct CliquePartition {
  std::vector<std::vector<VertexId>> cliques;
};

/// Greedy partition of the live vertices into disjoint cliques.
///
/// Edges are visited by lighter endpoint weight descending, then heavier
/// endpoint weight descending, then (lighter, heavier) id pair. An edge with
/// both endpoints free seeds a clique {heavier, lighter}, which then takes the
/// free neighbors of the heavier endpoint adjacent to every member, heaviest
/// first (ties by ascending id). Two-vertex cliques are then re-paired with
/// free neighbors wherever that raises their value, and leftover free edges
/// are paired in the same edge order. Remaining vertices are singletons, in
/// ascending id order, after all other cliques.
CliquePartition clique_partition(const WeightedGraph& g);

/// Sum over cliques of (clique weight - heaviest member). Any cover must take
/// all but at most one vertex of every clique, so this never exceeds the
/// minimum cover weight.
Weight lower_bound(const WeightedGraph& g);

/// Repeated bound evaluations on one graph as vertices come and go. The edge
/// order is fixed at construction, so every later call must pass that graph
/// or a restriction of it to fewer live vertices.
///
/// A call at `level` k > 0 scans only the edges that were live at the last
/// call at level k - 1, so it must come after that call and with no vertex
/// restored since. Depth in a search tree satisfies this.
class CliqueBounder {
 public:
  explicit CliqueBounder(const WeightedGraph& g);
  /// Starts over on another graph, keeping the scratch space.
  void rebind(const WeightedGraph& g);

  Weight lower_bound(const WeightedGraph& g, std::size_t level = 0);
  CliquePartition partition(const WeightedGraph& g);
  /// Adds each clique's term to bounds[label[v]] for its members v. Labels
  /// must not split a clique; vertices without an edge are skipped.
  void lower_bound_by_label(const WeightedGraph& g, std::size_t level,
                            std::span<const std::uint32_t> label, std::span<Weight> bounds);

 private:
  template <class OnClique>
  void for_each_clique(const WeightedGraph& g, std::size_t level, OnClique&& on_clique);
  void greedy(const WeightedGraph& g, std::span<const Edge> source, std::vector<Edge>& live);
  void improve_pairs(const WeightedGraph& g, std::span<const Edge> live);
  VertexId heaviest_free(const WeightedGraph& g, VertexId v, VertexId skip) const;

  std::vector<Edge> order_;
  std::vector<std::vector<Edge>> levels_;
  std::vector<std::uint32_t> pending_;
  std::vector<std::uint32_t> owner_;
  std::vector<VertexId> members_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> hits_;
  std::vector<VertexId> candidates_;
  std::vector<VertexId> clique_;
};

}  // namespace mwvc
