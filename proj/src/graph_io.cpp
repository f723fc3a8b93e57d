#include "graphburn/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "graphburn/error.hpp"

namespace graphburn {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
  if (!tok.empty() && tok.front() == '-') {
    throw ParseError(line_no, "negative vertex id '" + std::string(tok) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "malformed integer token '" + std::string(tok) + "'");
  }
  return value;
}

void check_weight(std::string_view tok, std::size_t line_no) {
  double w = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "malformed weight token '" + std::string(tok) + "'");
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

constexpr std::uint64_t kMaxVertices = std::numeric_limits<Vertex>::max() - 1;

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, Indexing indexing) {
  struct RawEdge {
    std::uint64_t u, v;
  };
  std::vector<RawEdge> raw;
  std::optional<std::uint64_t> declared_n;
  std::optional<Indexing> hinted;
  std::vector<std::string> labels;
  std::uint64_t min_id = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_id = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '%' || tokens[0].front() == '#') {
      if (tokens[0] != "#" || tokens.size() < 2) continue;
      if (tokens[1] == "vertices" && tokens.size() == 3) {
        declared_n = parse_id(tokens[2], line_no);
      } else if (tokens[1] == "indexing" && tokens.size() == 3) {
        if (tokens[2] == "zero") hinted = Indexing::zero;
        else if (tokens[2] == "one") hinted = Indexing::one;
      } else if (tokens[1] == "labels") {
        labels.assign(tokens.begin() + 2, tokens.end());
      }
      continue;
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected 2 or 3 tokens, got " + std::to_string(tokens.size()));
    }
    const auto u = parse_id(tokens[0], line_no);
    const auto v = parse_id(tokens[1], line_no);
    if (tokens.size() == 3) check_weight(tokens[2], line_no);
    if (u > kMaxVertices || v > kMaxVertices) throw ParseError(line_no, "vertex id too large");
    min_id = std::min({min_id, u, v});
    max_id = std::max({max_id, u, v});
    raw.push_back({u, v});
  }

  Indexing mode = indexing;
  if (mode == Indexing::automatic) {
    if (hinted) mode = *hinted;
    else mode = (!raw.empty() && min_id == 1) ? Indexing::one : Indexing::zero;
  }
  const std::uint64_t shift = mode == Indexing::one ? 1 : 0;
  if (shift == 1 && !raw.empty() && min_id == 0) {
    throw ParseError(0, "vertex id 0 in a one-indexed edge list");
  }

  std::uint64_t n = raw.empty() ? 0 : max_id + 1 - shift;
  if (declared_n) n = std::max(n, *declared_n);

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    edges.emplace_back(static_cast<Vertex>(e.u - shift), static_cast<Vertex>(e.v - shift));
  }
  ParsedGraph out;
  out.graph = Graph::from_edges(n, edges, &out.dropped);
  if (!labels.empty()) {
    try {
      out.graph = out.graph.with_labels(std::move(labels));
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, std::string("bad labels directive: ") + e.what());
    }
  }
  return out;
}

ParsedGraph parse_edge_list_string(const std::string& text, Indexing indexing) {
  std::istringstream in(text);
  return parse_edge_list(in, indexing);
}

ParsedGraph parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError(1, "empty Matrix Market stream");
  ++line_no;
  auto header = split_ws(line);
  if (header.empty() || lower(header[0]) != "%%matrixmarket") {
    throw ParseError(line_no, "missing %%MatrixMarket header");
  }
  if (header.size() != 5 || lower(header[1]) != "matrix") {
    throw UnsupportedFormat("unsupported Matrix Market header: " + line);
  }
  const auto layout = lower(header[2]);
  const auto field = lower(header[3]);
  const auto symmetry = lower(header[4]);
  if (layout != "coordinate") throw UnsupportedFormat("only coordinate layout is supported, got " + layout);
  if (symmetry != "symmetric") throw UnsupportedFormat("only symmetric matrices are supported, got " + symmetry);
  if (field != "pattern" && field != "integer" && field != "real") {
    throw UnsupportedFormat("unsupported field type " + field);
  }
  const std::size_t value_tokens = field == "pattern" ? 0 : 1;

  std::optional<std::uint64_t> rows;
  std::uint64_t declared_entries = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (!rows) {
      if (tokens.size() != 3) throw ParseError(line_no, "dimension line needs 3 integers");
      const auto r = parse_id(tokens[0], line_no);
      const auto c = parse_id(tokens[1], line_no);
      declared_entries = parse_id(tokens[2], line_no);
      if (r != c) throw ParseError(line_no, "matrix is not square");
      if (r > kMaxVertices) throw ParseError(line_no, "dimension too large");
      rows = r;
      edges.reserve(declared_entries);
      continue;
    }
    if (tokens.size() != 2 + value_tokens) {
      throw ParseError(line_no, "expected " + std::to_string(2 + value_tokens) + " tokens per entry");
    }
    const auto i = parse_id(tokens[0], line_no);
    const auto j = parse_id(tokens[1], line_no);
    if (value_tokens == 1) check_weight(tokens[2], line_no);
    if (i < 1 || j < 1 || i > *rows || j > *rows) {
      throw ParseError(line_no, "entry (" + std::string(tokens[0]) + ", " + std::string(tokens[1]) +
                                    ") outside declared bounds");
    }
    edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
  }
  if (!rows) throw ParseError(line_no, "missing dimension line");
  if (edges.size() != declared_entries) {
    throw ParseError(line_no, "declared " + std::to_string(declared_entries) + " entries, found " +
                                  std::to_string(edges.size()));
  }
  ParsedGraph out;
  out.graph = Graph::from_edges(*rows, edges, &out.dropped);
  return out;
}

ParsedGraph parse_matrix_market_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_market(in);
}

GraphFormat parse_graph_format(const std::string& name) {
  const auto n = lower(name);
  if (n == "edgelist" || n == "edges" || n == "txt") return GraphFormat::edge_list;
  if (n == "mtx" || n == "matrixmarket") return GraphFormat::matrix_market;
  throw std::invalid_argument("unknown graph format '" + name + "' (expected edgelist or mtx)");
}

ParsedGraph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return format == GraphFormat::matrix_market ? parse_matrix_market(in) : parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.num_vertices() << '\n';
  out << "# indexing zero\n";
  if (g.has_labels()) {
    out << "# labels";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace graphburn
