#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mwvc/branch.hpp"
#include "mwvc/graph.hpp"
#include "mwvc/reduce.hpp"

namespace mwvc {

struct ResourceBudget {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
};

/// Node and wall-clock allowance shared by every search of one solve. Safe to
/// consult from several component searches at once.
class SearchBudget {
 public:
  explicit SearchBudget(const ResourceBudget& budget = {});

  /// Claims one search node. False once either limit is reached; from then on
  /// it stays false.
  bool admit_node();
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::optional<std::uint64_t> node_limit_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

struct Incumbent {
  std::vector<VertexId> cover;
  Weight weight = 0;
};

struct SearchStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes = 0;
  std::size_t max_depth = 0;
};

struct SearchOptions {
  HeuristicChoice heuristic;
  /// Test hook: with the bound off, pruning compares w(S) alone.
  bool use_lower_bound = true;
  /// Apply the reduction rules at every node: in full at the root, then only
  /// around each branch's removals.
  bool reduce_in_search = false;
  ReduceOptions reduce;
  /// Solve components of a node's graph separately, each against the
  /// incumbent's remaining allowance.
  bool decompose = false;
  /// Called with every new incumbent weight.
  std::function<void(Weight)> on_improvement;
};

struct SearchResult {
  Incumbent best;
  SearchStats stats;
  /// False if the budget ran out before the tree was exhausted.
  bool complete = true;
};

/// Depth-first branch and bound over `g`.
///
/// `partial` holds vertices already committed (and already removed from `g`).
/// Each node returns at once when `g` has no edges, prunes when
/// lower_bound(g) + w(partial) >= w(incumbent), and otherwise branches on a
/// selected vertex v: first v joins the cover, then N(v) does. The incumbent
/// only changes on a strict improvement. `g` is restored to its entry state
/// before returning.
SearchResult search(WeightedGraph& g, std::span<const VertexId> partial, Incumbent incumbent,
                    const SearchOptions& options, SearchBudget& budget);

SearchResult search(WeightedGraph& g, std::span<const VertexId> partial, Incumbent incumbent,
                    const SearchOptions& options = {});

struct SolveOptions {
  HeuristicChoice heuristic;
  ResourceBudget budget;
  bool reductions = true;
  ReduceOptions reduce;
  /// Search independent components on OpenMP threads.
  bool parallel_components = false;
  bool use_lower_bound = true;
  /// Re-apply the reduction rules at every search node. Needs `reductions`.
  bool reduce_in_search = true;
  /// Split a node whose remaining graph falls apart into components.
  bool decompose = true;
};

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes = 0;
  std::size_t max_depth = 0;
  /// Empty (zero counts) when reductions are disabled.
  ReductionOutcome reduction;
  std::size_t remaining_vertices = 0;
  std::size_t remaining_edges = 0;
  /// Sizes of the components left after reduction, in component order.
  std::vector<std::size_t> component_sizes;
  double wall_seconds = 0.0;
};

struct SolveResult {
  /// Sorted ids of the input graph.
  std::vector<VertexId> cover;
  Weight weight = 0;
  bool optimal = true;
  SolveStats stats;
};

/// Reduce to a fixpoint, split the rest into connected components and search
/// each one starting from its whole vertex set as incumbent. The returned
/// cover is always a vertex cover of `g`; `optimal` is false only when the
/// budget ran out.
SolveResult solve(const WeightedGraph& g, const SolveOptions& options = {});

/// Seed used for the H2 stream of the i-th component.
std::uint64_t component_seed(std::uint64_t seed, std::size_t component);

}  // namespace mwvc
