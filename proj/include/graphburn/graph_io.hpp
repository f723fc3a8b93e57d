#pragma once

#include <iosfwd>
#include <string>

#include "graphburn/graph.hpp"

namespace graphburn {

enum class Indexing { zero, one, automatic };

struct ParsedGraph {
  Graph graph;
  BuildStats dropped;
};

/// Reads a whitespace-separated edge list. Lines starting with '%' or '#' are
/// comments; a third token per line (a weight) is ignored.
///
/// Three comment directives written by write_edge_list are honoured so that
/// canonical output reads back to the same graph:
///   # vertices <n>      lower bound on the vertex count (keeps isolated tail vertices)
///   # indexing zero|one resolves automatic indexing
///   # labels <l0> <l1> ...
///
/// Automatic indexing treats the ids as one-based iff the smallest id seen is 1.
ParsedGraph parse_edge_list(std::istream& in, Indexing indexing = Indexing::automatic);
ParsedGraph parse_edge_list_string(const std::string& text, Indexing indexing = Indexing::automatic);

/// Reads a Matrix Market coordinate file with symmetric structure. Pattern,
/// integer and real fields are accepted; values are discarded.
ParsedGraph parse_matrix_market(std::istream& in);
ParsedGraph parse_matrix_market_string(const std::string& text);

enum class GraphFormat { edge_list, matrix_market };

GraphFormat parse_graph_format(const std::string& name);
// Opens `path` and dispatches on `format`. Throws std::runtime_error if the file cannot be read.
ParsedGraph read_graph_file(const std::string& path, GraphFormat format);

/// Canonical serialization: zero-based "u v" lines with u < v in
/// lexicographic order, preceded by the directive comments described above.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list_string(const Graph& g);

}  // namespace graphburn
