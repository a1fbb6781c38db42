#include "mwvc/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace mwvc {

double graph_density(std::size_t vertices, std::size_t edges) {
  if (vertices < 2) return 0.0;
  const double v = static_cast<double>(vertices);
  return 2.0 * static_cast<double>(edges) / (v * (v - 1.0));
}

namespace {

double round_millis(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

nlohmann::ordered_json to_json(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["instance"] = r.instance;
  j["command"] = r.config.command;
  j["format"] = r.format;
  j["weight_source"] = r.weight_source;
  j["num_vertices"] = r.num_vertices;
  j["num_edges"] = r.num_edges;
  j["density"] = r.density;
  j["load"] = {{"duplicate_edges", r.load.duplicate_edges}, {"self_loops", r.load.self_loops}};

  ordered_json red;
  red["enabled"] = r.reductions_enabled;
  red["remaining_vertices"] = r.remaining_vertices;
  red["remaining_edges"] = r.remaining_edges;
  red["num_components"] = r.num_components;
  red["removed_by_rule"] = {{"degree0", r.removed_by_rule.degree0},
                            {"adjacent", r.removed_by_rule.adjacent},
                            {"degree1", r.removed_by_rule.degree1},
                            {"degree2", r.removed_by_rule.degree2},
                            {"zero_weight", r.removed_by_rule.zero_weight}};
  red["removed_total"] = r.removed_by_rule.total();
  red["passes"] = r.reduction_passes;
  red["partial_cover_weight"] = r.partial_cover_weight;
  j["reduction"] = std::move(red);

  j["weight"] = r.weight;
  j["optimal"] = r.optimal;
  j["runtime_seconds"] = round_millis(r.runtime_seconds);
  j["search"] = {{"nodes_explored", r.nodes_explored},
                 {"prunes", r.prunes},
                 {"max_depth", r.max_depth},
                 {"component_sizes", r.component_sizes}};

  ordered_json cfg;
  cfg["heuristic"] = std::string(heuristic_name(r.config.heuristic));
  cfg["seed"] = r.config.seed;
  cfg["time_limit_seconds"] =
      r.config.time_limit_seconds ? ordered_json(*r.config.time_limit_seconds) : ordered_json();
  cfg["node_limit"] = r.config.node_limit ? ordered_json(*r.config.node_limit) : ordered_json();
  cfg["reductions"] = r.config.reductions;
  cfg["zero_weight_rule"] = r.config.zero_weight_rule;
  cfg["parallel_components"] = r.config.parallel_components;
  cfg["search_reductions"] = r.config.search_reductions;
  cfg["decompose"] = r.config.decompose;
  j["config"] = std::move(cfg);

  j["cover"] = r.cover;
  return j;
}

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << "instance            " << r.instance << " (" << r.format << ", weights "
      << r.weight_source << ")\n";
  out << "|V| |E| density     " << r.num_vertices << ' ' << r.num_edges << ' ' << r.density
      << '\n';
  if (r.load.duplicate_edges || r.load.self_loops)
    out << "dropped on load     " << r.load.duplicate_edges << " duplicate edges, "
        << r.load.self_loops << " self-loops\n";
  if (r.reductions_enabled) {
    const auto& c = r.removed_by_rule;
    out << "reduction           " << c.total() << " removed in " << r.reduction_passes
        << " passes (degree0 " << c.degree0 << ", adjacent " << c.adjacent << ", degree1 "
        << c.degree1 << ", degree2 " << c.degree2;
    if (r.config.zero_weight_rule) out << ", zero-weight " << c.zero_weight;
    out << ")\n";
    out << "partial cover       weight " << r.partial_cover_weight << '\n';
  } else {
    out << "reduction           disabled\n";
  }
  out << "remaining           " << r.remaining_vertices << " vertices, " << r.remaining_edges
      << " edges, " << r.num_components << " components\n";
  if (r.config.command != "reduce")
    out << "search              " << r.nodes_explored << " nodes, " << r.prunes
        << " prunes, depth " << r.max_depth << '\n';
  out << "cover weight        " << r.weight << (r.optimal ? " (optimal)" : " (not proven optimal)")
      << '\n';
  out << "cover size          " << r.cover.size() << '\n';
  out << "runtime             " << round_millis(r.runtime_seconds) << " s\n";
  return out.str();
}

}  // namespace

std::string emit_report(const RunReport& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return to_json(report).dump(2) + "\n";
  return to_text(report);
}

}  // namespace mwvc
