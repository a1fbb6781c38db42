#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mwvc {

using VertexId = std::uint32_t;
using Weight = std::int64_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr Weight kMaxVertexWeight = std::numeric_limits<std::uint32_t>::max();

/// Thrown when a caller breaks an operation's precondition (dead vertex,
/// stale checkpoint, selecting on an edgeless graph, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown by WeightedGraph::build for inputs that cannot form a graph.
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void expects(bool condition, const char* what) {
  if (!condition) throw ContractViolation(what);
}

struct LoadStats {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

struct Checkpoint {
  std::size_t trail_position = 0;
  std::uint64_t stamp = 0;
};

/// Vertex-weighted undirected simple graph supporting vertex removal with
/// LIFO rollback.
///
/// Adjacency is stored CSR-style. Each vertex's slice is partitioned into a
/// live prefix of length degree(v) followed by neighbors that have been
/// removed; every entry knows the position of its reverse entry, so removing a
/// vertex costs O(degree) and restoring it costs the same. A removed vertex's
/// own slice is frozen until it is restored, which is what makes LIFO
/// rollback exact.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Self-loops and repeated edges are dropped and counted in `stats`.
  static WeightedGraph build(std::size_t n, std::span<const Edge> edges,
                             std::span<const Weight> weights,
                             LoadStats* stats = nullptr);

  /// Turns this graph into a copy of the part of `g` on `vertices`, renumbered
  /// densely in that order, reusing storage. Every live neighbor of a listed
  /// vertex must be listed too, so `vertices` is a union of components.
  /// `local` is scratch with at least g.size() entries.
  void assign_components(const WeightedGraph& g, std::span<const VertexId> vertices,
                         std::vector<std::uint32_t>& local);

  /// Number of vertex ids, live or not.
  std::size_t size() const { return weight_.size(); }
  std::size_t num_alive() const { return num_alive_; }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return num_alive_ == 0; }

  bool contains(VertexId v) const { return v < size() && alive_[v] != 0; }
  bool alive(VertexId v) const { return alive_[v] != 0; }
  Weight weight(VertexId v) const { return weight_[v]; }

  std::size_t degree(VertexId v) const {
    expects(contains(v), "degree: vertex is not live");
    return degree_[v];
  }

  /// Live neighbors of a live vertex. Invalidated by the next mutation.
  std::span<const VertexId> neighbors(VertexId v) const {
    expects(contains(v), "neighbors: vertex is not live");
    return {neighbor_.data() + offset_[v], degree_[v]};
  }

  Weight neighborhood_weight(VertexId v) const;

  /// Live vertex ids in unspecified order. Invalidated by the next mutation.
  std::span<const VertexId> live_vertices() const {
    return {live_.data(), num_alive_};
  }
  std::vector<VertexId> live_vertices_sorted() const;

  /// Live edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Weight total_weight() const;

  void remove_vertex(VertexId v);

  Checkpoint checkpoint() const {
    return {trail_.size(), trail_.empty() ? 0 : trail_stamp_.back()};
  }
  void restore(const Checkpoint& c);

  /// Vertices removed since `c` was taken, oldest first.
  std::span<const VertexId> removed_since(const Checkpoint& c) const {
    return {trail_.data() + c.trail_position, trail_.size() - c.trail_position};
  }

  /// Walks the whole structure and checks symmetry, liveness of adjacency,
  /// degree and edge counters. Returns false on the first inconsistency.
  bool audit() const;

  /// Unchecked accessors for hot loops that already know `v` is live. On a
  /// removed vertex they give the neighbors it had when it was removed.
  std::size_t degree_unchecked(VertexId v) const { return degree_[v]; }
  std::span<const VertexId> neighbors_unchecked(VertexId v) const {
    return {neighbor_.data() + offset_[v], degree_[v]};
  }

 private:
  void swap_entries(std::size_t a, std::size_t b);

  std::vector<Weight> weight_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> degree_;
  std::vector<VertexId> neighbor_;
  std::vector<std::size_t> twin_;
  std::vector<VertexId> live_;
  std::vector<std::uint32_t> live_pos_;
  std::size_t num_alive_ = 0;
  std::size_t num_edges_ = 0;

  std::vector<VertexId> trail_;
  std::vector<std::uint64_t> trail_stamp_;
  std::uint64_t next_stamp_ = 1;
};

/// Same live vertex set, weights and neighbor sets. Ids must line up.
bool structurally_equal(const WeightedGraph& a, const WeightedGraph& b);

struct ComponentPartition {
  /// Each component sorted ascending; components ordered by smallest member.
  std::vector<std::vector<VertexId>> components;
};

ComponentPartition components(const WeightedGraph& g);

/// A standalone copy of part of a graph, renumbered densely.
struct Subgraph {
  WeightedGraph graph;
  std::vector<VertexId> original_id;
};

/// `vertices` must be live in `g`.
Subgraph induced_subgraph(const WeightedGraph& g, std::span<const VertexId> vertices);

/// One pass over the graph; the i-th result is induced by partition.components[i].
std::vector<Subgraph> split_components(const WeightedGraph& g,
                                       const ComponentPartition& partition);

/// True iff every live edge of `g` has an endpoint in `cover`. Ids in `cover`
/// outside the graph make the answer false.
bool is_vertex_cover(const WeightedGraph& g, std::span<const VertexId> cover);

Weight weight_of(const WeightedGraph& g, std::span<const VertexId> vertices);

/// Epoch-stamped membership marks, reset in O(1).
class VertexMarks {
 public:
  explicit VertexMarks(std::size_t n = 0) : stamp_(n, 0) {}

  void resize(std::size_t n) { stamp_.assign(n, 0), epoch_ = 1; }
  void clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  void mark(VertexId v) { stamp_[v] = epoch_; }
  bool marked(VertexId v) const { return stamp_[v] == epoch_; }
  void clear_one(VertexId v) { stamp_[v] = 0; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

}  // namespace mwvc
