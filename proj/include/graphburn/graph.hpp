#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphburn {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Counters for input that was accepted but not kept.
struct BuildStats {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

/// Simple undirected graph in canonical form.
///
/// Adjacency lists are sorted ascending, symmetric and free of self-loops and
/// duplicate edges. A Graph is immutable once built, so it can be shared
/// freely between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices [0, n). Self-loops and repeated edges are
  /// dropped and counted in `stats` when given. Throws std::invalid_argument
  /// if an endpoint is >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, BuildStats* stats = nullptr);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges, BuildStats* stats = nullptr) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), stats);
  }

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Label of v, or its decimal id when the graph is unlabeled.
  std::string name(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view label) const;

  // Returns a copy carrying per-vertex display names. Size must equal n and
  // names must be unique and non-empty.
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::vector<std::string> labels_;
};

struct ComponentPartition {
  std::vector<std::uint32_t> component_id;
  std::size_t count = 0;

  bool same_component(Vertex u, Vertex v) const { return component_id.at(u) == component_id.at(v); }
};

ComponentPartition connected_components(const Graph& g);

}  // namespace graphburn
