#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mwvc/graph.hpp"
#include "mwvc/weights.hpp"

namespace mwvc {

enum class GraphFormat { kEdgeList, kMatrixMarket, kDimacs };
enum class Indexing { kZeroBased, kOneBased };

std::string_view format_name(GraphFormat f);
std::optional<GraphFormat> parse_format(std::string_view name);

/// Input that cannot be turned into a graph. `line` is 0 when the problem is
/// not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Weights written inside the graph file ("v ID W" in edge lists, "n ID W" in
/// DIMACS).
struct InFileWeights {};
/// Sidecar file, one integer per line in vertex order.
struct WeightFile {
  std::string path;
};
using WeightSource = std::variant<InFileWeights, WeightFile, WeightScheme>;

struct GraphFileSpec {
  std::string path;
  /// Detected from extension, then content, when unset.
  std::optional<GraphFormat> format;
  /// Edge lists default to 1-based; Matrix Market and DIMACS are always 1-based.
  std::optional<Indexing> indexing;
  /// Declared vertex count for edge lists; otherwise the largest id seen.
  std::optional<std::size_t> num_vertices;
  /// Unset means in-file weights when the file has any, else i-mod-200.
  std::optional<WeightSource> weights;
};

struct LoadedGraph {
  WeightedGraph graph;
  GraphFormat format = GraphFormat::kEdgeList;
  Indexing indexing = Indexing::kOneBased;
  LoadStats stats;
  std::string weight_source;
};

LoadedGraph parse_graph(const GraphFileSpec& spec);

/// Parses from a stream. `spec.path` is only used for messages and format
/// detection by extension; a WeightFile source is still opened from disk.
LoadedGraph parse_graph(std::istream& in, const GraphFileSpec& spec);

/// One non-negative integer per line; must provide exactly `n` values.
std::vector<Weight> read_weight_file(std::istream& in, std::size_t n,
                                     const std::string& source = "<weights>");

/// Vertex ids one per line in the given indexing; returned 0-based.
std::vector<VertexId> read_cover(std::istream& in, Indexing indexing, std::size_t n,
                                 const std::string& source = "<cover>");
void write_cover(std::ostream& out, std::span<const VertexId> cover, Indexing indexing);

/// Writes the live part of `g` as 1-based DIMACS with "n" weight lines.
/// Vertices are renumbered densely in ascending id order; each one's
/// original (input-indexed) id is recorded as a "c map NEW OLD" comment.
void write_dimacs(std::ostream& out, const WeightedGraph& g, Indexing original_indexing);

}  // namespace mwvc
