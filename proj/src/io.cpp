#include "mwvc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mwvc {

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::kEdgeList: return "edge-list";
    case GraphFormat::kMatrixMarket: return "matrix-market";
    case GraphFormat::kDimacs: return "dimacs";
  }
  return "?";
}

std::optional<GraphFormat> parse_format(std::string_view name) {
  if (name == "edge-list" || name == "edges") return GraphFormat::kEdgeList;
  if (name == "matrix-market" || name == "mtx") return GraphFormat::kMatrixMarket;
  if (name == "dimacs") return GraphFormat::kDimacs;
  return std::nullopt;
}

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(line ? source + ":" + std::to_string(line) + ": " + message
                              : source + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool is_comment(const std::vector<std::string_view>& tokens) {
  if (tokens.empty()) return true;
  const char c = tokens.front().front();
  return c == '%' || c == '#' || tokens.front() == "c";
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  /// Next non-comment line, tokenized. False at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++number_;
      tokens = tokenize(line_);
      if (!is_comment(tokens)) return true;
    }
    return false;
  }

  std::size_t line_number() const { return number_; }
  const std::string& line() const { return line_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source_, number_, message);
  }

  template <class T>
  T number(std::string_view token, const char* what) const {
    T value{};
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
      fail(std::string("expected ") + what + ", got '" + std::string(token) + "'");
    return value;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::string line_;
  std::size_t number_ = 0;
};

struct RawGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::optional<Weight>> in_file_weight;
  bool any_in_file_weight = false;
};

// Converts a file id to 0-based, checking it against the declared count.
VertexId to_internal(const LineReader& r, long long id, Indexing indexing,
                     std::optional<std::size_t> declared) {
  const long long first = indexing == Indexing::kOneBased ? 1 : 0;
  if (id < first)
    r.fail("vertex id " + std::to_string(id) + " below the first id " + std::to_string(first));
  const auto internal = static_cast<unsigned long long>(id - first);
  if (declared && internal >= *declared)
    r.fail("vertex id " + std::to_string(id) + " beyond the declared " +
           std::to_string(*declared) + " vertices");
  if (internal >= std::numeric_limits<VertexId>::max()) r.fail("vertex id too large");
  return static_cast<VertexId>(internal);
}

void set_weight(const LineReader& r, RawGraph& raw, VertexId v, long long w) {
  if (w < 0) r.fail("negative weight " + std::to_string(w));
  if (w > kMaxVertexWeight) r.fail("weight " + std::to_string(w) + " does not fit 32 bits");
  if (raw.in_file_weight.size() <= v) raw.in_file_weight.resize(v + 1);
  raw.in_file_weight[v] = w;
  raw.any_in_file_weight = true;
}

RawGraph read_edge_list(LineReader& r, Indexing indexing, std::optional<std::size_t> declared) {
  RawGraph raw;
  std::size_t max_plus_one = 0;
  std::vector<std::string_view> t;
  while (r.next(t)) {
    if (t.front() == "v") {
      if (t.size() != 3) r.fail("weight line must be 'v ID WEIGHT'");
      const VertexId v = to_internal(r, r.number<long long>(t[1], "vertex id"), indexing, declared);
      set_weight(r, raw, v, r.number<long long>(t[2], "weight"));
      max_plus_one = std::max<std::size_t>(max_plus_one, v + 1);
      continue;
    }
    if (t.size() < 2) r.fail("edge line needs two vertex ids");
    // Columns beyond the endpoints (edge values, timestamps) are ignored.
    for (std::size_t i = 2; i < t.size(); ++i) r.number<double>(t[i], "numeric column");
    const VertexId a = to_internal(r, r.number<long long>(t[0], "vertex id"), indexing, declared);
    const VertexId b = to_internal(r, r.number<long long>(t[1], "vertex id"), indexing, declared);
    raw.edges.emplace_back(a, b);
    max_plus_one = std::max<std::size_t>(max_plus_one, std::max(a, b) + std::size_t{1});
  }
  raw.n = declared.value_or(max_plus_one);
  return raw;
}

RawGraph read_dimacs(LineReader& r) {
  RawGraph raw;
  std::optional<std::size_t> declared;
  std::vector<std::string_view> t;
  while (r.next(t)) {
    if (t.front() == "p") {
      if (declared) r.fail("second problem line");
      if (t.size() != 4) r.fail("problem line must be 'p FORMAT VERTICES EDGES'");
      declared = r.number<std::size_t>(t[2], "vertex count");
      continue;
    }
    if (!declared) r.fail("'" + std::string(t.front()) + "' line before the problem line");
    if (t.front() == "e") {
      if (t.size() < 3) r.fail("edge line must be 'e U V'");
      const VertexId a = to_internal(r, r.number<long long>(t[1], "vertex id"),
                                     Indexing::kOneBased, declared);
      const VertexId b = to_internal(r, r.number<long long>(t[2], "vertex id"),
                                     Indexing::kOneBased, declared);
      raw.edges.emplace_back(a, b);
    } else if (t.front() == "n") {
      if (t.size() != 3) r.fail("weight line must be 'n ID WEIGHT'");
      const VertexId v = to_internal(r, r.number<long long>(t[1], "vertex id"),
                                     Indexing::kOneBased, declared);
      set_weight(r, raw, v, r.number<long long>(t[2], "weight"));
    } else {
      r.fail("unknown line type '" + std::string(t.front()) + "'");
    }
  }
  if (!declared) r.fail("missing problem line");
  raw.n = *declared;
  return raw;
}

RawGraph read_matrix_market(LineReader& r) {
  RawGraph raw;
  std::optional<std::size_t> declared;
  std::vector<std::string_view> t;
  while (r.next(t)) {
    if (!declared) {
      if (t.size() != 3) r.fail("size line must be 'ROWS COLS ENTRIES'");
      const auto rows = r.number<std::size_t>(t[0], "row count");
      const auto cols = r.number<std::size_t>(t[1], "column count");
      declared = std::max(rows, cols);
      continue;
    }
    if (t.size() < 2) r.fail("entry line needs a row and a column");
    const VertexId a =
        to_internal(r, r.number<long long>(t[0], "row"), Indexing::kOneBased, declared);
    const VertexId b =
        to_internal(r, r.number<long long>(t[1], "column"), Indexing::kOneBased, declared);
    raw.edges.emplace_back(a, b);
  }
  if (!declared) r.fail("missing size line");
  raw.n = *declared;
  return raw;
}

GraphFormat detect_format(const std::string& path, const std::string& head) {
  auto ends_with = [&](std::string_view ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends_with(".mtx")) return GraphFormat::kMatrixMarket;
  if (ends_with(".dimacs") || ends_with(".clq") || ends_with(".col")) return GraphFormat::kDimacs;

  std::istringstream lines(head);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("%%MatrixMarket", 0) == 0) return GraphFormat::kMatrixMarket;
    const auto t = tokenize(line);
    if (is_comment(t)) continue;
    if (t.front() == "p") return GraphFormat::kDimacs;
    break;
  }
  return GraphFormat::kEdgeList;
}

std::vector<Weight> load_weight_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open weight file");
  return read_weight_file(in, n, path);
}

}  // namespace

std::vector<Weight> read_weight_file(std::istream& in, std::size_t n, const std::string& source) {
  LineReader r(in, source);
  std::vector<Weight> out;
  std::vector<std::string_view> t;
  while (r.next(t)) {
    if (t.size() != 1) r.fail("expected one weight per line");
    const auto w = r.number<long long>(t[0], "weight");
    if (w < 0) r.fail("negative weight " + std::to_string(w));
    if (w > kMaxVertexWeight) r.fail("weight " + std::to_string(w) + " does not fit 32 bits");
    if (out.size() == n) r.fail("more weights than the " + std::to_string(n) + " vertices");
    out.push_back(w);
  }
  if (out.size() != n)
    throw ParseError(source, 0, "expected " + std::to_string(n) + " weights, found " +
                                    std::to_string(out.size()));
  return out;
}

LoadedGraph parse_graph(std::istream& in, const GraphFileSpec& spec) {
  const std::string source = spec.path.empty() ? "<input>" : spec.path;

  // Buffer the input so the format can be sniffed from its first lines.
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  LoadedGraph out;
  out.format = spec.format.value_or(detect_format(spec.path, text.substr(0, 4096)));
  out.indexing = out.format == GraphFormat::kEdgeList ? spec.indexing.value_or(Indexing::kOneBased)
                                                      : Indexing::kOneBased;
  if (out.format != GraphFormat::kEdgeList && spec.indexing == Indexing::kZeroBased)
    throw ParseError(source, 0, std::string(format_name(out.format)) + " files are 1-based");

  std::istringstream body(text);
  LineReader reader(body, source);
  RawGraph raw;
  switch (out.format) {
    case GraphFormat::kEdgeList: raw = read_edge_list(reader, out.indexing, spec.num_vertices); break;
    case GraphFormat::kDimacs: raw = read_dimacs(reader); break;
    case GraphFormat::kMatrixMarket: raw = read_matrix_market(reader); break;
  }

  WeightSource source_kind = spec.weights.value_or(
      raw.any_in_file_weight ? WeightSource{InFileWeights{}}
                             : WeightSource{WeightScheme::index_mod_200()});
  std::vector<Weight> weights;
  if (std::holds_alternative<InFileWeights>(source_kind)) {
    raw.in_file_weight.resize(raw.n);
    for (std::size_t v = 0; v < raw.n; ++v) {
      if (!raw.in_file_weight[v]) {
        const std::size_t shown = out.indexing == Indexing::kOneBased ? v + 1 : v;
        throw ParseError(source, 0, "no weight given for vertex " + std::to_string(shown));
      }
      weights.push_back(*raw.in_file_weight[v]);
    }
    out.weight_source = "in-file";
  } else if (const auto* file = std::get_if<WeightFile>(&source_kind)) {
    weights = load_weight_file(file->path, raw.n);
    out.weight_source = "file:" + file->path;
  } else {
    const auto& scheme = std::get<WeightScheme>(source_kind);
    weights = scheme.assign(raw.n);
    out.weight_source = scheme.describe();
  }

  try {
    out.graph = WeightedGraph::build(raw.n, raw.edges, weights, &out.stats);
  } catch (const BuildError& e) {
    throw ParseError(source, 0, e.what());
  }
  return out;
}

LoadedGraph parse_graph(const GraphFileSpec& spec) {
  std::ifstream in(spec.path);
  if (!in) throw ParseError(spec.path, 0, "cannot open graph file");
  return parse_graph(in, spec);
}

std::vector<VertexId> read_cover(std::istream& in, Indexing indexing, std::size_t n,
                                 const std::string& source) {
  LineReader r(in, source);
  std::vector<VertexId> out;
  std::vector<std::string_view> t;
  while (r.next(t)) {
    if (t.size() != 1) r.fail("expected one vertex id per line");
    out.push_back(to_internal(r, r.number<long long>(t[0], "vertex id"), indexing, n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_cover(std::ostream& out, std::span<const VertexId> cover, Indexing indexing) {
  const std::uint64_t shift = indexing == Indexing::kOneBased ? 1 : 0;
  for (VertexId v : cover) out << (v + shift) << '\n';
}

void write_dimacs(std::ostream& out, const WeightedGraph& g, Indexing original_indexing) {
  const auto live = g.live_vertices_sorted();
  std::vector<std::uint32_t> local(g.size());
  for (std::size_t i = 0; i < live.size(); ++i) local[live[i]] = static_cast<std::uint32_t>(i);
  const std::uint64_t shift = original_indexing == Indexing::kOneBased ? 1 : 0;

  out << "c reduced graph\n";
  for (std::size_t i = 0; i < live.size(); ++i)
    out << "c map " << i + 1 << ' ' << live[i] + shift << '\n';
  out << "p edge " << live.size() << ' ' << g.num_edges() << '\n';
  for (std::size_t i = 0; i < live.size(); ++i)
    out << "n " << i + 1 << ' ' << g.weight(live[i]) << '\n';
  for (const auto& [a, b] : g.edges()) out << "e " << local[a] + 1 << ' ' << local[b] + 1 << '\n';
}

}  // namespace mwvc
