#include "mwvc/search.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <utility>
#include <stdexcept>

#include "mwvc/bound.hpp"
#include "mwvc/random.hpp"

namespace mwvc {

SearchBudget::SearchBudget(const ResourceBudget& budget) : node_limit_(budget.node_limit) {
  if (budget.time_limit_seconds) {
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(*budget.time_limit_seconds));
  }
}

bool SearchBudget::admit_node() {
  if (exhausted()) return false;
  if (node_limit_ && nodes_.fetch_add(1, std::memory_order_relaxed) >= *node_limit_) {
    exhausted_.store(true, std::memory_order_relaxed);
    return false;
  }
  if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) {
    exhausted_.store(true, std::memory_order_relaxed);
    return false;
  }
  return true;
}

namespace {

class Searcher {
 public:
  // Scratch is sized for `capacity` vertex ids, so restart() can move the
  // searcher to any graph that small.
  Searcher(WeightedGraph& g, std::span<const VertexId> partial, Incumbent incumbent,
           const SearchOptions& options, SearchBudget& budget, std::size_t capacity)
      : g_(g),
        options_(options),
        budget_(budget),
        selector_(options.heuristic, capacity),
        bounder_(g),
        reducer_(capacity, options.reduce),
        current_(partial.begin(), partial.end()),
        current_weight_(weight_of(g, partial)),
        best_(std::move(incumbent)),
        reach_(capacity),
        label_(capacity, 0),
        capacity_(capacity) {}

  Searcher(WeightedGraph& g, std::span<const VertexId> partial, Incumbent incumbent,
           const SearchOptions& options, SearchBudget& budget)
      : Searcher(g, partial, std::move(incumbent), options, budget, g.size()) {}

  // Starts a fresh search on the same graph object, which the caller has
  // refilled, from an empty partial cover.
  void restart(Incumbent incumbent) {
    selector_.reseed(options_.heuristic.seed);
    bounder_.rebind(g_);
    current_.clear();
    current_weight_ = 0;
    best_ = std::move(incumbent);
    stats_ = {};
    aborted_ = false;
  }

  SearchResult run() {
    visit(0, nullptr);
    return {std::move(best_), stats_, !aborted_};
  }

 private:
  // `since` marks where the parent's removals begin; null at the root.
  void visit(std::size_t depth, const Checkpoint* since) {
    if (!budget_.admit_node()) {
      aborted_ = true;
      return;
    }
    ++stats_.nodes_explored;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    if (!options_.reduce_in_search) {
      expand(depth);
      return;
    }
    const Checkpoint cp = g_.checkpoint();
    // Forced vertices go straight onto the partial cover.
    const std::size_t first = current_.size();
    if (since) {
      reducer_.run(g_, g_.removed_since(*since), current_);
    } else if (!root_reduced_) {
      const auto forced = reduce(g_, options_.reduce).partial_cover.members;
      current_.insert(current_.end(), forced.begin(), forced.end());
    }
    const std::size_t forced = current_.size() - first;
    for (std::size_t i = first; i < current_.size(); ++i) current_weight_ += g_.weight(current_[i]);
    expand(depth);
    g_.restore(cp);
    untake(forced);
  }

  void expand(std::size_t depth) {
    // Isolated leftovers never need to be covered.
    if (g_.num_edges() == 0) {
      if (current_weight_ < best_.weight) {
        best_.cover = current_;
        best_.weight = current_weight_;
        if (options_.on_improvement && nested_ == 0) options_.on_improvement(best_.weight);
      }
      return;
    }

    const Weight bound = options_.use_lower_bound ? bounder_.lower_bound(g_, depth) : 0;
    if (bound + current_weight_ >= best_.weight) {
      ++stats_.prunes;
      return;
    }

    if (options_.decompose && split(depth)) return;

    const VertexId v = selector_.select(g_);

    {
      const Checkpoint cp = g_.checkpoint();
      take(v);
      g_.remove_vertex(v);
      visit(depth + 1, &cp);
      g_.restore(cp);
      untake(1);
    }
    if (aborted_) return;

    {
      const Checkpoint cp = g_.checkpoint();
      const std::size_t first = current_.size();
      for (VertexId u : g_.neighbors(v)) take(u);
      const std::size_t count = current_.size() - first;
      for (std::size_t i = first; i < current_.size(); ++i) g_.remove_vertex(current_[i]);
      g_.remove_vertex(v);
      visit(depth + 1, &cp);
      g_.restore(cp);
      untake(count);
    }
  }

  static Incumbent starting_incumbent(const WeightedGraph& g, std::vector<VertexId> cover,
                                     Weight cap) {
    const Weight full = weight_of(g, cover);
    return full < cap ? Incumbent{std::move(cover), full} : Incumbent{{}, cap};
  }

  // Searches the only edged component left in g_, which is at the rule
  // fixpoint, from an empty partial cover.
  Incumbent solve_in_place(std::size_t depth, const std::vector<VertexId>& part, Weight cap) {
    std::vector<VertexId> saved_current;
    std::swap(saved_current, current_);
    const Weight saved_weight = std::exchange(current_weight_, 0);
    Incumbent saved_best = std::exchange(best_, starting_incumbent(g_, part, cap));
    ++nested_;
    const Checkpoint here = g_.checkpoint();
    visit(depth + 1, &here);
    --nested_;
    Incumbent found = std::exchange(best_, std::move(saved_best));
    current_ = std::move(saved_current);
    current_weight_ = saved_weight;
    return found;
  }

  // Searches a copy of one component with a second searcher, kept between
  // calls along with its graph.
  Incumbent solve_copy(std::size_t depth, const std::vector<VertexId>& part, Weight cap);

  // Labels every vertex that has an edge with its component, numbered in
  // discovery order; returns the component count.
  std::size_t label_components() {
    reach_.clear();
    std::size_t count = 0;
    for (VertexId s : g_.live_vertices()) {
      if (g_.degree_unchecked(s) == 0 || reach_.marked(s)) continue;
      reach_.mark(s);
      label_[s] = static_cast<std::uint32_t>(count);
      stack_.assign(1, s);
      while (!stack_.empty()) {
        const VertexId v = stack_.back();
        stack_.pop_back();
        for (VertexId u : g_.neighbors_unchecked(v)) {
          if (reach_.marked(u)) continue;
          reach_.mark(u);
          label_[u] = static_cast<std::uint32_t>(count);
          stack_.push_back(u);
        }
      }
      ++count;
    }
    return count;
  }

  // Solves each edged component on its own once the graph falls apart. Each
  // one must come in under what is left of the incumbent after the others'
  // bounds; a component that cannot prunes the whole node. Components are
  // searched in place with the others removed.
  bool split(std::size_t depth) {
    const std::size_t count = label_components();
    if (count < 2) return false;

    std::vector<std::vector<VertexId>> parts(count);
    for (VertexId v : g_.live_vertices())
      if (g_.degree_unchecked(v) > 0) parts[label_[v]].push_back(v);
    std::vector<Weight> bounds(count, 0);
    if (options_.use_lower_bound) bounder_.lower_bound_by_label(g_, depth, label_, bounds);
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return parts[a].size() < parts[b].size(); });

    Weight rest = 0;
    for (Weight b : bounds) rest += b;
    const Weight allowance = best_.weight - current_weight_;
    Weight solved = 0;
    std::vector<VertexId> chosen;
    for (std::size_t i : order) {
      rest -= bounds[i];
      const Weight cap = allowance - solved - rest;
      if (bounds[i] >= cap) {
        ++stats_.prunes;
        return true;
      }

      Incumbent found;
      if (i == order.back()) {
        // The largest goes last and is searched in place, with the others
        // removed; the rest are copied out.
        const Checkpoint outer = g_.checkpoint();
        for (std::size_t j = 0; j < count; ++j)
          if (j != i)
            for (VertexId v : parts[j]) g_.remove_vertex(v);
        found = solve_in_place(depth, parts[i], cap);
        g_.restore(outer);
      } else {
        found = solve_copy(depth, parts[i], cap);
      }

      if (aborted_) return true;
      if (found.weight >= cap) return true;
      solved += found.weight;
      chosen.insert(chosen.end(), found.cover.begin(), found.cover.end());
    }

    if (current_weight_ + solved < best_.weight) {
      best_.cover = current_;
      best_.cover.insert(best_.cover.end(), chosen.begin(), chosen.end());
      best_.weight = current_weight_ + solved;
      if (options_.on_improvement && nested_ == 0) options_.on_improvement(best_.weight);
    }
    return true;
  }

  void take(VertexId v) {
    current_.push_back(v);
    current_weight_ += g_.weight(v);
  }

  void untake(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      current_weight_ -= g_.weight(current_.back());
      current_.pop_back();
    }
  }

  WeightedGraph& g_;
  const SearchOptions& options_;
  SearchBudget& budget_;
  BranchSelector selector_;
  CliqueBounder bounder_;
  LocalReducer reducer_;
  std::vector<VertexId> current_;
  Weight current_weight_ = 0;
  Incumbent best_;
  SearchStats stats_;
  bool aborted_ = false;
  // Set for a copied component: it is already at the rule fixpoint.
  bool root_reduced_ = false;
  std::unique_ptr<struct CopySlot> copy_;
  // Components being searched in place; their incumbents are not reported.
  std::size_t nested_ = 0;
  VertexMarks reach_;
  std::vector<std::uint32_t> label_;
  std::vector<VertexId> stack_;
  std::size_t capacity_;
};

struct CopySlot {
  WeightedGraph graph;
  std::vector<std::uint32_t> local;
  SearchOptions options;
  std::unique_ptr<Searcher> searcher;
};

Incumbent Searcher::solve_copy(std::size_t depth, const std::vector<VertexId>& part, Weight cap) {
  if (!copy_) {
    copy_ = std::make_unique<CopySlot>();
    copy_->local.resize(capacity_);
    copy_->options = options_;
    copy_->options.on_improvement = nullptr;
  }
  CopySlot& slot = *copy_;
  slot.graph.assign_components(g_, part, slot.local);
  slot.options.heuristic.seed =
      splitmix64(options_.heuristic.seed ^ splitmix64(stats_.nodes_explored));
  std::vector<VertexId> all(part.size());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  Incumbent start = starting_incumbent(slot.graph, std::move(all), cap);
  if (!slot.searcher) {
    slot.searcher = std::make_unique<Searcher>(slot.graph, std::span<const VertexId>{},
                                               std::move(start), slot.options, budget_, capacity_);
    slot.searcher->root_reduced_ = true;
  } else {
    slot.searcher->restart(std::move(start));
  }

  SearchResult r = slot.searcher->run();
  stats_.nodes_explored += r.stats.nodes_explored;
  stats_.prunes += r.stats.prunes;
  stats_.max_depth = std::max(stats_.max_depth, depth + 1 + r.stats.max_depth);
  if (!r.complete) aborted_ = true;
  for (VertexId& v : r.best.cover) v = part[v];
  return std::move(r.best);
}

}  // namespace

SearchResult search(WeightedGraph& g, std::span<const VertexId> partial, Incumbent incumbent,
                    const SearchOptions& options, SearchBudget& budget) {
  Searcher searcher(g, partial, std::move(incumbent), options, budget);
  return searcher.run();
}

SearchResult search(WeightedGraph& g, std::span<const VertexId> partial, Incumbent incumbent,
                    const SearchOptions& options) {
  SearchBudget unlimited;
  return search(g, partial, std::move(incumbent), options, unlimited);
}

std::uint64_t component_seed(std::uint64_t seed, std::size_t component) {
  return component == 0 ? seed : splitmix64(seed ^ splitmix64(component));
}

SolveResult solve(const WeightedGraph& g, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SolveResult result;
  SolveStats& stats = result.stats;

  WeightedGraph work = g;
  if (options.reductions) stats.reduction = reduce(work, options.reduce);
  stats.remaining_vertices = work.num_alive();
  stats.remaining_edges = work.num_edges();

  const ComponentPartition partition = components(work);
  std::vector<Subgraph> parts = split_components(work, partition);
  for (const auto& comp : partition.components) stats.component_sizes.push_back(comp.size());

  SearchBudget budget(options.budget);
  std::vector<SearchResult> found(parts.size());
  std::vector<std::exception_ptr> failures(parts.size());

  auto solve_part = [&](std::size_t i) {
    WeightedGraph& sub = parts[i].graph;
    if (sub.num_edges() == 0) return;
    Incumbent everything{sub.live_vertices_sorted(), sub.total_weight()};
    SearchOptions search_options;
    search_options.heuristic = options.heuristic;
    search_options.heuristic.seed = component_seed(options.heuristic.seed, i);
    search_options.use_lower_bound = options.use_lower_bound;
    search_options.reduce_in_search = options.reductions && options.reduce_in_search;
    search_options.reduce = options.reduce;
    search_options.decompose = options.decompose;
    found[i] = search(sub, {}, std::move(everything), search_options, budget);
  };

  const auto count = static_cast<std::int64_t>(parts.size());
  if (options.parallel_components) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        solve_part(static_cast<std::size_t>(i));
      } catch (...) {
        failures[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (const auto& failure : failures)
      if (failure) std::rethrow_exception(failure);
  } else {
    for (std::int64_t i = 0; i < count; ++i) solve_part(static_cast<std::size_t>(i));
  }

  result.cover = stats.reduction.partial_cover.members;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const SearchResult& r = found[i];
    for (VertexId local : r.best.cover) result.cover.push_back(parts[i].original_id[local]);
    stats.nodes_explored += r.stats.nodes_explored;
    stats.prunes += r.stats.prunes;
    stats.max_depth = std::max(stats.max_depth, r.stats.max_depth);
    if (!r.complete) result.optimal = false;
  }
  std::sort(result.cover.begin(), result.cover.end());
  result.weight = weight_of(g, result.cover);

  if (!is_vertex_cover(g, result.cover))
    throw std::logic_error("solve: assembled cover misses an edge");

  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace mwvc
