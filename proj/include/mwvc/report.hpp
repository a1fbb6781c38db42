#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwvc/branch.hpp"
#include "mwvc/graph.hpp"
#include "mwvc/reduce.hpp"

namespace mwvc {

enum class OutputFormat { kText, kJson };

struct RunConfig {
  std::string command;
  Heuristic heuristic = Heuristic::kMaxDegree;
  std::uint64_t seed = 0;
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
  bool reductions = true;
  bool zero_weight_rule = false;
  bool parallel_components = false;
  bool search_reductions = true;
  bool decompose = true;
};

/// Everything a run reports. For `reduce` runs the cover is the forced
/// partial cover and `optimal` says whether reduction alone finished the job.
struct RunReport {
  std::string instance;
  std::string format;
  std::string weight_source;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  double density = 0.0;
  LoadStats load;

  bool reductions_enabled = true;
  std::size_t remaining_vertices = 0;
  std::size_t remaining_edges = 0;
  std::size_t num_components = 0;
  RuleCounts removed_by_rule;
  std::size_t reduction_passes = 0;
  Weight partial_cover_weight = 0;

  Weight weight = 0;
  bool optimal = true;
  double runtime_seconds = 0.0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes = 0;
  std::size_t max_depth = 0;
  std::vector<std::size_t> component_sizes;

  /// Ids as they appear in the input file.
  std::vector<std::uint64_t> cover;
  RunConfig config;
};

/// 2|E| / (|V| (|V| - 1)), or 0 below two vertices.
double graph_density(std::size_t vertices, std::size_t edges);

/// JSON keys are fixed and emitted in a fixed order; runtime is rounded to
/// milliseconds.
std::string emit_report(const RunReport& report, OutputFormat format);

}  // namespace mwvc
