#pragma once

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "mwvc/graph.hpp"
#include "mwvc/weights.hpp"

namespace mwvc {

inline constexpr std::size_t kOracleMaxVertices = 20;

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Weight weight = 0;
  /// Lexicographically smallest (as a sorted id list) among all minimum covers.
  std::vector<VertexId> one_cover;
};

/// Exhaustive scan of every subset of the live vertices. Refuses graphs with
/// more than kOracleMaxVertices live vertices.
OracleResult brute_force_mwvc(const WeightedGraph& g);

/// Same scan split across OpenMP threads; returns the identical witness.
OracleResult brute_force_mwvc_parallel(const WeightedGraph& g);

struct EdgeProbability {
  double p = 0.0;
};
struct TargetEdges {
  std::size_t m = 0;
};
using EdgeModel = std::variant<EdgeProbability, TargetEdges>;

/// Seeded G(n, p) or G(n, m) graph. Identical arguments give an identical
/// graph on every platform. TargetEdges is capped at n(n-1)/2.
WeightedGraph random_graph(std::size_t n, EdgeModel edges, const WeightScheme& weights,
                           std::uint64_t seed);

}  // namespace mwvc
