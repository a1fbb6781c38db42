#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mwvc/graph.hpp"

namespace mwvc {

/// Vertices committed to the cover. A vertex only enters once it has been
/// removed from the graph.
struct PartialCover {
  std::vector<VertexId> members;
  Weight total_weight = 0;

  void add(const WeightedGraph& g, VertexId v) {
    members.push_back(v);
    total_weight += g.weight(v);
  }
};

struct RuleCounts {
  std::size_t degree0 = 0;
  std::size_t adjacent = 0;
  std::size_t degree1 = 0;
  std::size_t degree2 = 0;
  std::size_t zero_weight = 0;

  std::size_t total() const { return degree0 + adjacent + degree1 + degree2 + zero_weight; }
  bool operator==(const RuleCounts&) const = default;
};

struct ReductionOutcome {
  PartialCover partial_cover;
  RuleCounts removed_by_rule;
  std::size_t passes = 0;
};

struct ReduceOptions {
  /// Extra rule: a zero-weight vertex with at least one edge goes straight
  /// into the cover. Runs between Degree-0 and Adjacent when enabled.
  bool zero_weight_rule = false;
};

// Rule predicates on a single live vertex / neighbor pair.
bool degree0_applies(const WeightedGraph& g, VertexId v);
bool adjacent_applies(const WeightedGraph& g, VertexId v);
bool degree1_applies(const WeightedGraph& g, VertexId v);
bool zero_weight_applies(const WeightedGraph& g, VertexId v);

/// Live degree-2 vertices whose neighborhood is exactly {a, b}, ascending.
std::vector<VertexId> degree2_group(const WeightedGraph& g, VertexId a, VertexId b);

/// Each rule_* runs ascending-id sweeps until a whole sweep applies nothing
/// and returns the number of vertices it removed.
std::size_t rule_degree0(WeightedGraph& g);
std::size_t rule_adjacent(WeightedGraph& g, PartialCover& cover);
std::size_t rule_degree1(WeightedGraph& g, PartialCover& cover);
/// Groups are visited in ascending (min, max) neighbor-pair order; the group
/// for a pair is always the maximal one at the time it is visited.
std::size_t rule_degree2(WeightedGraph& g, PartialCover& cover);
std::size_t rule_zero_weight(WeightedGraph& g, PartialCover& cover);

/// Fixpoint reduction driven by per-rule dirty queues. Produces exactly the
/// graph and cover that reduce_reference() produces.
ReductionOutcome reduce(WeightedGraph& g, const ReduceOptions& options = {});

/// Fixpoint reduction by repeated full sweeps of the rule_* functions.
ReductionOutcome reduce_reference(WeightedGraph& g, const ReduceOptions& options = {});

/// Restores the rule fixpoint after a few removals from a graph that was at
/// one. Only vertices within distance two of a removal are rechecked; that
/// is everywhere a rule can newly apply. The order of application differs
/// from reduce(), so the result can be a different (equally sound) fixpoint.
class LocalReducer {
 public:
  LocalReducer(std::size_t capacity, const ReduceOptions& options);

  /// `removed` lists vertices already taken out of `g`. Forced cover vertices
  /// are appended to `forced`.
  void run(WeightedGraph& g, std::span<const VertexId> removed, std::vector<VertexId>& forced);

 private:
  void touch(const WeightedGraph& g, VertexId removed);
  void mark(VertexId v);

  ReduceOptions options_;
  VertexMarks queued_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> scratch_;
};

/// Describes the first rule still applicable to `g`, or nullopt if `g` is at
/// a fixpoint.
std::optional<std::string> find_applicable_rule(const WeightedGraph& g,
                                                const ReduceOptions& options = {});

}  // namespace mwvc
