#include "mwvc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "mwvc/random.hpp"

namespace mwvc {

namespace {

using Mask = std::uint32_t;

struct Instance {
  std::vector<VertexId> ids;
  std::vector<Mask> neighbors;
  std::vector<Weight> weight;
};

Instance compile(const WeightedGraph& g) {
  Instance inst;
  inst.ids = g.live_vertices_sorted();
  if (inst.ids.size() > kOracleMaxVertices)
    throw OracleRefused("brute force refuses " + std::to_string(inst.ids.size()) +
                        " live vertices (limit " + std::to_string(kOracleMaxVertices) + ")");
  std::vector<std::uint32_t> local(g.size());
  for (std::size_t i = 0; i < inst.ids.size(); ++i) local[inst.ids[i]] = static_cast<Mask>(i);
  inst.neighbors.assign(inst.ids.size(), 0);
  for (std::size_t i = 0; i < inst.ids.size(); ++i) {
    inst.weight.push_back(g.weight(inst.ids[i]));
    for (VertexId u : g.neighbors(inst.ids[i])) inst.neighbors[i] |= Mask{1} << local[u];
  }
  return inst;
}

// Evaluates one subset; nullopt if it leaves an edge uncovered.
std::optional<Weight> cover_weight(const Instance& inst, Mask subset) {
  const std::size_t k = inst.ids.size();
  Weight w = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (subset >> i & 1) {
      w += inst.weight[i];
    } else if (inst.neighbors[i] & ~subset) {
      return std::nullopt;
    }
  }
  return w;
}

// Order of the subsets as ascending id lists.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const int d = std::countr_zero(a ^ b);
  const Mask above = ~((Mask{2} << d) - 1);
  if (a >> d & 1) return (b & above) != 0;  // a has d; b wins only as a proper prefix
  return (a & above) == 0;
}

struct Best {
  Weight weight = std::numeric_limits<Weight>::max();
  Mask subset = 0;

  void offer(Weight w, Mask s) {
    if (w < weight || (w == weight && lex_less(s, subset))) {
      weight = w;
      subset = s;
    }
  }
};

OracleResult finish(const Instance& inst, const Best& best) {
  OracleResult out;
  out.weight = best.weight;
  for (std::size_t i = 0; i < inst.ids.size(); ++i)
    if (best.subset >> i & 1) out.one_cover.push_back(inst.ids[i]);
  return out;
}

}  // namespace

OracleResult brute_force_mwvc(const WeightedGraph& g) {
  const Instance inst = compile(g);
  const std::uint64_t total = std::uint64_t{1} << inst.ids.size();
  Best best;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (auto w = cover_weight(inst, static_cast<Mask>(s))) best.offer(*w, static_cast<Mask>(s));
  }
  return finish(inst, best);
}

OracleResult brute_force_mwvc_parallel(const WeightedGraph& g) {
  const Instance inst = compile(g);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << inst.ids.size());
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < total; ++s) {
      if (auto w = cover_weight(inst, static_cast<Mask>(s))) local.offer(*w, static_cast<Mask>(s));
    }
#pragma omp critical(mwvc_oracle_merge)
    best.offer(local.weight, local.subset);
  }
  return finish(inst, best);
}

WeightedGraph random_graph(std::size_t n, EdgeModel model, const WeightScheme& weights,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;

  if (const auto* prob = std::get_if<EdgeProbability>(&model)) {
    expects(prob->p >= 0.0 && prob->p <= 1.0, "random_graph: probability outside [0, 1]");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (unit_interval(rng) < prob->p)
          edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  } else {
    const std::size_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
    const std::size_t m = std::min(std::get<TargetEdges>(model).m, max_edges);
    std::unordered_set<std::uint64_t> seen;
    while (edges.size() < m) {
      auto a = static_cast<VertexId>(uniform_below(rng, n));
      auto b = static_cast<VertexId>(uniform_below(rng, n));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (seen.insert((std::uint64_t{a} << 32) | b).second) edges.emplace_back(a, b);
    }
  }

  WeightScheme scheme = weights;
  if (scheme.kind == WeightScheme::Kind::kUniformRandom) scheme.seed ^= splitmix64(seed);
  const auto w = scheme.assign(n);
  return WeightedGraph::build(n, edges, w);
}

}  // namespace mwvc
