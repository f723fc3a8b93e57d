#include "graphburn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace graphburn {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, BuildStats* stats) {
  BuildStats local;
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t directed = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    const auto before = adj.size();
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    local.duplicates += before - adj.size();
    directed += adj.size();
  }
  // Each duplicate undirected edge was counted once per endpoint.
  local.duplicates /= 2;
  g.num_edges_ = directed / 2;
  if (stats != nullptr) {
    stats->self_loops += local.self_loops;
    stats->duplicates += local.duplicates;
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::name(Vertex v) const {
  if (v >= num_vertices()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != num_vertices()) {
    throw std::invalid_argument("expected " + std::to_string(num_vertices()) + " labels, got " +
                                std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty() || !seen.insert(l).second) {
      throw std::invalid_argument("labels must be unique and non-empty");
    }
    if (l.find_first_of(", \t\r\n") != std::string::npos) {
      throw std::invalid_argument("label '" + l + "' contains a comma or whitespace");
    }
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

ComponentPartition connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const std::size_t n = g.num_vertices();
  ComponentPartition part;
  part.component_id.assign(n, kUnset);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (part.component_id[root] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(part.count++);
    part.component_id[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (part.component_id[w] == kUnset) {
          part.component_id[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return part;
}

}  // namespace graphburn
