#include "mwvc/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace mwvc {

WeightedGraph WeightedGraph::build(std::size_t n, std::span<const Edge> edges,
                                   std::span<const Weight> weights,
                                   LoadStats* stats) {
  if (n > std::numeric_limits<VertexId>::max())
    throw BuildError("vertex count " + std::to_string(n) + " exceeds the 32-bit id range");
  if (weights.size() != n)
    throw BuildError("expected " + std::to_string(n) + " weights, got " +
                     std::to_string(weights.size()));
  for (std::size_t v = 0; v < n; ++v) {
    if (weights[v] < 0)
      throw BuildError("vertex " + std::to_string(v) + " has negative weight " +
                       std::to_string(weights[v]));
    if (weights[v] > kMaxVertexWeight)
      throw BuildError("vertex " + std::to_string(v) + " weight " +
                       std::to_string(weights[v]) + " does not fit 32 bits");
  }

  LoadStats local;
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n)
      throw BuildError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    if (a == b) {
      ++local.self_loops;
      continue;
    }
    normalized.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(normalized.begin(), normalized.end());
  const auto last = std::unique(normalized.begin(), normalized.end());
  local.duplicate_edges = static_cast<std::size_t>(normalized.end() - last);
  normalized.erase(last, normalized.end());
  if (stats) *stats = local;

  WeightedGraph g;
  g.weight_.assign(weights.begin(), weights.end());
  g.alive_.assign(n, 1);
  g.degree_.assign(n, 0);
  for (const auto& [a, b] : normalized) {
    ++g.degree_[a];
    ++g.degree_[b];
  }
  g.offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offset_[v + 1] = g.offset_[v] + g.degree_[v];

  // Edges are sorted, so each slice comes out sorted: all (x, v) with x < v
  // precede every (v, y).
  g.neighbor_.resize(2 * normalized.size());
  g.twin_.resize(2 * normalized.size());
  std::vector<std::size_t> fill(g.offset_.begin(), g.offset_.end() - 1);
  for (const auto& [a, b] : normalized) {
    const std::size_t ea = fill[a]++;
    const std::size_t eb = fill[b]++;
    g.neighbor_[ea] = b;
    g.neighbor_[eb] = a;
    g.twin_[ea] = eb;
    g.twin_[eb] = ea;
  }

  g.live_.resize(n);
  g.live_pos_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.live_[v] = static_cast<VertexId>(v);
    g.live_pos_[v] = static_cast<std::uint32_t>(v);
  }
  g.num_alive_ = n;
  g.num_edges_ = normalized.size();
  return g;
}

void WeightedGraph::assign_components(const WeightedGraph& g, std::span<const VertexId> vertices,
                                      std::vector<std::uint32_t>& local) {
  const std::size_t n = vertices.size();
  weight_.resize(n);
  degree_.resize(n);
  offset_.resize(n + 1);
  offset_[0] = 0;
  std::size_t edges_twice = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = vertices[i];
    expects(g.contains(v), "assign_components: vertex is not live");
    local[v] = static_cast<std::uint32_t>(i);
    weight_[i] = g.weight_[v];
    degree_[i] = g.degree_[v];
    edges_twice += degree_[i];
    offset_[i + 1] = edges_twice;
  }
  neighbor_.resize(edges_twice);
  twin_.resize(edges_twice);

  // Same fill order as build(): for every edge (i, j) with i < j, taken in
  // ascending i, i's entry and j's entry are claimed together.
  live_pos_.resize(n);
  for (std::size_t i = 0; i < n; ++i) live_pos_[i] = static_cast<std::uint32_t>(offset_[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId u : g.neighbors_unchecked(vertices[i])) {
      const std::uint32_t j = local[u];
      expects(j < n && vertices[j] == u, "assign_components: neighbor outside the listed set");
      if (j <= i) continue;
      const std::size_t ea = live_pos_[i]++;
      const std::size_t eb = live_pos_[j]++;
      neighbor_[ea] = j;
      neighbor_[eb] = static_cast<VertexId>(i);
      twin_[ea] = eb;
      twin_[eb] = ea;
    }
  }

  alive_.assign(n, 1);
  live_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    live_[i] = static_cast<VertexId>(i);
    live_pos_[i] = static_cast<std::uint32_t>(i);
  }
  num_alive_ = n;
  num_edges_ = edges_twice / 2;
  trail_.clear();
  trail_stamp_.clear();
  next_stamp_ = 1;
}

Weight WeightedGraph::neighborhood_weight(VertexId v) const {
  Weight sum = 0;
  for (VertexId u : neighbors(v)) sum += weight_[u];
  return sum;
}

std::vector<VertexId> WeightedGraph::live_vertices_sorted() const {
  std::vector<VertexId> out(live_.begin(), live_.begin() + num_alive_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId v : live_vertices()) {
    for (VertexId u : neighbors_unchecked(v))
      if (v < u) out.emplace_back(v, u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight WeightedGraph::total_weight() const {
  Weight sum = 0;
  for (VertexId v : live_vertices()) sum += weight_[v];
  return sum;
}

void WeightedGraph::swap_entries(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap(neighbor_[a], neighbor_[b]);
  std::swap(twin_[a], twin_[b]);
  twin_[twin_[a]] = a;
  twin_[twin_[b]] = b;
}

void WeightedGraph::remove_vertex(VertexId v) {
  expects(contains(v), "remove_vertex: vertex is not live");
  const std::size_t begin = offset_[v];
  const std::size_t end = begin + degree_[v];
  for (std::size_t k = begin; k < end; ++k) {
    const VertexId u = neighbor_[k];
    const std::size_t last = offset_[u] + degree_[u] - 1;
    swap_entries(twin_[k], last);
    --degree_[u];
  }
  num_edges_ -= degree_[v];
  alive_[v] = 0;

  const std::uint32_t pos = live_pos_[v];
  const VertexId tail = live_[num_alive_ - 1];
  std::swap(live_[pos], live_[num_alive_ - 1]);
  live_pos_[tail] = pos;
  live_pos_[v] = static_cast<std::uint32_t>(num_alive_ - 1);
  --num_alive_;

  trail_.push_back(v);
  trail_stamp_.push_back(next_stamp_++);
}

void WeightedGraph::restore(const Checkpoint& c) {
  expects(c.trail_position <= trail_.size() &&
              (c.trail_position == 0 ? c.stamp == 0
                                     : trail_stamp_[c.trail_position - 1] == c.stamp),
          "restore: checkpoint was invalidated by an earlier restore");
  while (trail_.size() > c.trail_position) {
    const VertexId v = trail_.back();
    trail_.pop_back();
    trail_stamp_.pop_back();

    // LIFO order guarantees v sits right after the live prefix of every
    // neighbor it had when removed, and at slot num_alive_ of the live list.
    const std::size_t begin = offset_[v];
    const std::size_t end = begin + degree_[v];
    for (std::size_t k = end; k-- > begin;) ++degree_[neighbor_[k]];
    num_edges_ += degree_[v];
    alive_[v] = 1;
    ++num_alive_;
  }
}

bool WeightedGraph::audit() const {
  const std::size_t n = size();
  std::size_t live_count = 0;
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive_[v]) continue;
    ++live_count;
    degree_sum += degree_[v];
    for (std::size_t k = offset_[v]; k < offset_[v] + degree_[v]; ++k) {
      const VertexId u = neighbor_[k];
      if (u == v || !alive_[u]) return false;
      const std::size_t back = twin_[k];
      if (back < offset_[u] || back >= offset_[u] + degree_[u]) return false;
      if (neighbor_[back] != v || twin_[back] != k) return false;
    }
  }
  if (live_count != num_alive_ || degree_sum != 2 * num_edges_) return false;
  for (std::size_t i = 0; i < num_alive_; ++i) {
    if (!alive_[live_[i]] || live_pos_[live_[i]] != i) return false;
  }
  return true;
}

bool structurally_equal(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.size() != b.size() || a.num_alive() != b.num_alive() ||
      a.num_edges() != b.num_edges())
    return false;
  std::vector<VertexId> na, nb;
  for (VertexId v = 0; v < a.size(); ++v) {
    if (a.alive(v) != b.alive(v) || a.weight(v) != b.weight(v)) return false;
    if (!a.alive(v)) continue;
    const auto sa = a.neighbors(v);
    const auto sb = b.neighbors(v);
    na.assign(sa.begin(), sa.end());
    nb.assign(sb.begin(), sb.end());
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    if (na != nb) return false;
  }
  return true;
}

ComponentPartition components(const WeightedGraph& g) {
  ComponentPartition out;
  std::vector<std::uint8_t> seen(g.size(), 0);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.size(); ++s) {
    if (!g.alive(s) || seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : g.neighbors_unchecked(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.components.push_back(std::move(comp));
  }
  return out;
}

namespace {

Subgraph induce(const WeightedGraph& g, std::span<const VertexId> vertices,
                std::vector<std::uint32_t>& local, std::vector<std::uint8_t>& in_set) {
  Subgraph sub;
  sub.original_id.assign(vertices.begin(), vertices.end());
  std::vector<Weight> weights;
  weights.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    expects(g.contains(vertices[i]), "induced_subgraph: vertex is not live");
    local[vertices[i]] = static_cast<std::uint32_t>(i);
    in_set[vertices[i]] = 1;
    weights.push_back(g.weight(vertices[i]));
  }
  std::vector<Edge> edges;
  for (VertexId v : vertices) {
    for (VertexId u : g.neighbors_unchecked(v))
      if (in_set[u] && v < u) edges.emplace_back(local[v], local[u]);
  }
  for (VertexId v : vertices) in_set[v] = 0;
  sub.graph = WeightedGraph::build(vertices.size(), edges, weights);
  return sub;
}

}  // namespace

Subgraph induced_subgraph(const WeightedGraph& g, std::span<const VertexId> vertices) {
  std::vector<std::uint32_t> local(g.size());
  std::vector<std::uint8_t> in_set(g.size(), 0);
  return induce(g, vertices, local, in_set);
}

std::vector<Subgraph> split_components(const WeightedGraph& g,
                                       const ComponentPartition& partition) {
  std::vector<std::uint32_t> local(g.size());
  std::vector<std::uint8_t> in_set(g.size(), 0);
  std::vector<Subgraph> out;
  out.reserve(partition.components.size());
  for (const auto& comp : partition.components) out.push_back(induce(g, comp, local, in_set));
  return out;
}

bool is_vertex_cover(const WeightedGraph& g, std::span<const VertexId> cover) {
  std::vector<std::uint8_t> in_cover(g.size(), 0);
  for (VertexId v : cover) {
    if (v >= g.size()) return false;
    in_cover[v] = 1;
  }
  for (VertexId v : g.live_vertices()) {
    if (in_cover[v]) continue;
    for (VertexId u : g.neighbors_unchecked(v))
      if (!in_cover[u]) return false;
  }
  return true;
}

Weight weight_of(const WeightedGraph& g, std::span<const VertexId> vertices) {
  Weight sum = 0;
  for (VertexId v : vertices) sum += g.weight(v);
  return sum;
}

}  // namespace mwvc
