#include "mwvc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwvc/io.hpp"
#include "mwvc/oracle.hpp"
#include "mwvc/report.hpp"
#include "mwvc/search.hpp"

namespace mwvc {

namespace {

struct InputFlags {
  std::string graph;
  std::string format;
  std::string weights;
  std::string indexing;
  std::size_t num_vertices = 0;
};

struct CommonFlags {
  std::string output = "text";
  std::string solution_out;
};

struct SolveFlags {
  std::string heuristic = "h1";
  std::uint64_t seed = 0;
  double time_limit = 0.0;
  std::uint64_t node_limit = 0;
  bool no_reductions = false;
  bool parallel_components = false;
  bool zero_weight_rule = false;
  bool no_search_reductions = false;
  bool no_decompose = false;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("graph", in.graph, "Graph file (edge list, Matrix Market or DIMACS)")
      ->required();
  cmd->add_option("--format", in.format, "Input format; detected when omitted")
      ->check(CLI::IsMember({"edge-list", "matrix-market", "dimacs"}));
  cmd->add_option("--weights", in.weights,
                  "in-file | i-mod-200 | i-mod-200-zero-based | uniform[:K] | "
                  "random:LOW:HIGH[:SEED] | path to a weight file");
  cmd->add_option("--indexing", in.indexing, "Edge-list vertex numbering (default 1)")
      ->check(CLI::IsMember({"0", "1"}));
  cmd->add_option("--num-vertices", in.num_vertices,
                  "Declared vertex count for edge lists (default: largest id)");
}

void add_common_flags(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--output", common.output, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--solution-out", common.solution_out,
                  "Write the cover, one vertex per line, in the input's numbering");
}

GraphFileSpec to_spec(const InputFlags& in) {
  GraphFileSpec spec;
  spec.path = in.graph;
  if (!in.format.empty()) spec.format = parse_format(in.format);
  if (!in.indexing.empty())
    spec.indexing = in.indexing == "0" ? Indexing::kZeroBased : Indexing::kOneBased;
  if (in.num_vertices > 0) spec.num_vertices = in.num_vertices;
  if (!in.weights.empty()) {
    if (in.weights == "in-file") {
      spec.weights = InFileWeights{};
    } else if (auto scheme = parse_weight_scheme(in.weights)) {
      spec.weights = *scheme;
    } else {
      spec.weights = WeightFile{in.weights};
    }
  }
  return spec;
}

std::vector<std::uint64_t> external_ids(std::span<const VertexId> cover, Indexing indexing) {
  const std::uint64_t shift = indexing == Indexing::kOneBased ? 1 : 0;
  std::vector<std::uint64_t> out;
  out.reserve(cover.size());
  for (VertexId v : cover) out.push_back(v + shift);
  return out;
}

RunReport base_report(const LoadedGraph& loaded, const std::string& path) {
  RunReport r;
  r.instance = std::filesystem::path(path).filename().string();
  r.format = std::string(format_name(loaded.format));
  r.weight_source = loaded.weight_source;
  r.num_vertices = loaded.graph.num_alive();
  r.num_edges = loaded.graph.num_edges();
  r.density = graph_density(r.num_vertices, r.num_edges);
  r.load = loaded.stats;
  return r;
}

void write_solution(const std::string& path, std::span<const VertexId> cover, Indexing indexing) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw ParseError(path, 0, "cannot write solution file");
  write_cover(file, cover, indexing);
}

OutputFormat output_format(const CommonFlags& c) {
  return c.output == "json" ? OutputFormat::kJson : OutputFormat::kText;
}

int run_solve(const InputFlags& in, const CommonFlags& common, const SolveFlags& flags,
              std::ostream& out) {
  const LoadedGraph loaded = parse_graph(to_spec(in));

  SolveOptions options;
  options.heuristic = {*parse_heuristic(flags.heuristic), flags.seed};
  if (flags.time_limit > 0) options.budget.time_limit_seconds = flags.time_limit;
  if (flags.node_limit > 0) options.budget.node_limit = flags.node_limit;
  options.reductions = !flags.no_reductions;
  options.reduce.zero_weight_rule = flags.zero_weight_rule;
  options.parallel_components = flags.parallel_components;
  options.reduce_in_search = !flags.no_search_reductions;
  options.decompose = !flags.no_decompose;

  const SolveResult result = solve(loaded.graph, options);

  RunReport r = base_report(loaded, in.graph);
  r.reductions_enabled = options.reductions;
  r.remaining_vertices = result.stats.remaining_vertices;
  r.remaining_edges = result.stats.remaining_edges;
  r.num_components = result.stats.component_sizes.size();
  r.removed_by_rule = result.stats.reduction.removed_by_rule;
  r.reduction_passes = result.stats.reduction.passes;
  r.partial_cover_weight = result.stats.reduction.partial_cover.total_weight;
  r.weight = result.weight;
  r.optimal = result.optimal;
  r.runtime_seconds = result.stats.wall_seconds;
  r.nodes_explored = result.stats.nodes_explored;
  r.prunes = result.stats.prunes;
  r.max_depth = result.stats.max_depth;
  r.component_sizes = result.stats.component_sizes;
  r.cover = external_ids(result.cover, loaded.indexing);
  r.config = {"solve",
              options.heuristic.kind,
              flags.seed,
              options.budget.time_limit_seconds,
              options.budget.node_limit,
              options.reductions,
              flags.zero_weight_rule,
              flags.parallel_components,
              options.reductions && options.reduce_in_search,
              options.decompose};

  write_solution(common.solution_out, result.cover, loaded.indexing);
  out << emit_report(r, output_format(common));
  return result.optimal ? kExitOk : kExitBudgetExpired;
}

int run_reduce(const InputFlags& in, const CommonFlags& common, bool zero_weight_rule,
               const std::string& graph_out, std::ostream& out) {
  const LoadedGraph loaded = parse_graph(to_spec(in));
  const auto started = std::chrono::steady_clock::now();

  WeightedGraph work = loaded.graph;
  ReduceOptions options;
  options.zero_weight_rule = zero_weight_rule;
  ReductionOutcome outcome = reduce(work, options);
  std::sort(outcome.partial_cover.members.begin(), outcome.partial_cover.members.end());
  const ComponentPartition parts = components(work);

  RunReport r = base_report(loaded, in.graph);
  r.remaining_vertices = work.num_alive();
  r.remaining_edges = work.num_edges();
  r.num_components = parts.components.size();
  for (const auto& c : parts.components) r.component_sizes.push_back(c.size());
  r.removed_by_rule = outcome.removed_by_rule;
  r.reduction_passes = outcome.passes;
  r.partial_cover_weight = outcome.partial_cover.total_weight;
  r.weight = outcome.partial_cover.total_weight;
  r.optimal = work.num_alive() == 0;
  r.cover = external_ids(outcome.partial_cover.members, loaded.indexing);
  r.config.command = "reduce";
  r.config.zero_weight_rule = zero_weight_rule;
  r.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (!graph_out.empty()) {
    std::ofstream file(graph_out);
    if (!file) throw ParseError(graph_out, 0, "cannot write reduced graph");
    write_dimacs(file, work, loaded.indexing);
  }
  write_solution(common.solution_out, outcome.partial_cover.members, loaded.indexing);
  out << emit_report(r, output_format(common));
  return kExitOk;
}

int run_oracle(const InputFlags& in, const CommonFlags& common, std::ostream& out) {
  const LoadedGraph loaded = parse_graph(to_spec(in));
  const OracleResult result = brute_force_mwvc(loaded.graph);
  write_solution(common.solution_out, result.one_cover, loaded.indexing);
  const auto cover = external_ids(result.one_cover, loaded.indexing);
  if (output_format(common) == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["instance"] = std::filesystem::path(in.graph).filename().string();
    j["command"] = "oracle";
    j["num_vertices"] = loaded.graph.num_alive();
    j["num_edges"] = loaded.graph.num_edges();
    j["weight"] = result.weight;
    j["cover"] = cover;
    out << j.dump(2) << '\n';
  } else {
    out << "minimum cover weight " << result.weight << "\ncover";
    for (auto v : cover) out << ' ' << v;
    out << '\n';
  }
  return kExitOk;
}

int run_verify(const InputFlags& in, const std::string& cover_path, std::ostream& out) {
  const LoadedGraph loaded = parse_graph(to_spec(in));
  std::ifstream file(cover_path);
  if (!file) throw ParseError(cover_path, 0, "cannot open cover file");
  const auto cover = read_cover(file, loaded.indexing, loaded.graph.size(), cover_path);
  const std::uint64_t shift = loaded.indexing == Indexing::kOneBased ? 1 : 0;

  std::vector<std::uint8_t> in_cover(loaded.graph.size(), 0);
  for (VertexId v : cover) in_cover[v] = 1;
  for (const auto& [a, b] : loaded.graph.edges()) {
    if (!in_cover[a] && !in_cover[b]) {
      out << "not a vertex cover: edge (" << a + shift << ", " << b + shift << ") is uncovered\n";
      return kExitNotACover;
    }
  }
  out << "valid vertex cover of " << cover.size() << " vertices, weight "
      << weight_of(loaded.graph, cover) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimum weight vertex cover for sparse graphs", "mwvc"};
  app.require_subcommand(1);

  InputFlags in;
  CommonFlags common;
  SolveFlags solve_flags;
  std::string graph_out;
  std::string cover_path;

  auto* solve_cmd = app.add_subcommand("solve", "Reduce, decompose and branch-and-bound");
  add_input_flags(solve_cmd, in);
  add_common_flags(solve_cmd, common);
  solve_cmd->add_option("--heuristic", solve_flags.heuristic, "Branching heuristic")
      ->check(CLI::IsMember({"h1", "h2", "h3", "h4"}));
  solve_cmd->add_option("--seed", solve_flags.seed, "Seed for h2");
  solve_cmd->add_option("--time-limit", solve_flags.time_limit, "Seconds; 0 means none")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--node-limit", solve_flags.node_limit, "Search nodes; 0 means none");
  solve_cmd->add_flag("--no-reductions", solve_flags.no_reductions, "Skip the reduction rules");
  solve_cmd->add_flag("--no-search-reductions", solve_flags.no_search_reductions,
                      "Reduce at the root only, not at every search node");
  solve_cmd->add_flag("--no-decompose", solve_flags.no_decompose,
                      "Do not split into components below the root");
  solve_cmd->add_flag("--parallel-components", solve_flags.parallel_components,
                      "Search components on parallel threads");
  solve_cmd->add_flag("--zero-weight-rule", solve_flags.zero_weight_rule,
                      "Also take every zero-weight vertex that has an edge");

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply the reduction rules only");
  add_input_flags(reduce_cmd, in);
  add_common_flags(reduce_cmd, common);
  reduce_cmd->add_flag("--zero-weight-rule", solve_flags.zero_weight_rule,
                       "Also take every zero-weight vertex that has an edge");
  reduce_cmd->add_option("--graph-out", graph_out, "Write the reduced graph (DIMACS)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute force over all subsets (at most 20 vertices)");
  add_input_flags(oracle_cmd, in);
  add_common_flags(oracle_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Check that a cover file covers every edge");
  add_input_flags(verify_cmd, in);
  verify_cmd->add_option("cover", cover_path, "Cover file, one vertex per line")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(in, common, solve_flags, out);
    if (reduce_cmd->parsed())
      return run_reduce(in, common, solve_flags.zero_weight_rule, graph_out, out);
    if (oracle_cmd->parsed()) return run_oracle(in, common, out);
    return run_verify(in, cover_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const OracleRefused& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace mwvc
