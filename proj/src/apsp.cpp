#include "graphburn/apsp.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "graphburn/parallel.hpp"

namespace graphburn {

std::string Distance::to_string() const { return finite() ? std::to_string(value_) : "inf"; }

std::ostream& operator<<(std::ostream& os, Distance d) { return os << d.to_string(); }

std::size_t DistanceMatrix::index(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    throw std::out_of_range("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range");
  }
  return std::size_t{u} * n_ + v;
}

DistanceMatrix apsp(const Graph& g, std::size_t threads) {
  const std::size_t n = g.num_vertices();
  DistanceMatrix dm(n);
  // Small graphs are faster on one thread than the cost of spawning workers.
  if (n < 256) threads = 1;
  parallel_for(n, threads, [&](std::size_t src) {
    auto row = dm.row(static_cast<Vertex>(src));
    std::vector<Vertex> queue;
    queue.reserve(n);
    row[src] = 0;
    queue.push_back(static_cast<Vertex>(src));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const auto next = row[u] + 1;
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == Distance::kUnreachable) {
          row[w] = next;
          queue.push_back(w);
        }
      }
    }
  });
  return dm;
}

Distance distance_to_set(const DistanceMatrix& dm, Vertex v, std::span<const Vertex> set) {
  if (set.empty()) throw std::invalid_argument("distance_to_set needs a non-empty set");
  Distance best = Distance::unreachable();
  for (Vertex s : set) best = std::min(best, dm.at(v, s));
  return best;
}

std::size_t eccentricity_lower_bound(const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  if (n == 0) return 0;

  // Component count: a vertex starts a new component when nothing earlier reaches it.
  std::size_t components = 0;
  Distance::rep diameter = 0;
  for (Vertex u = 0; u < n; ++u) {
    auto row = dm.row(u);
    bool first_in_component = true;
    for (Vertex v = 0; v < u; ++v) {
      if (row[v] != Distance::kUnreachable) {
        first_in_component = false;
        break;
      }
    }
    if (first_in_component) ++components;
    for (auto d : row) {
      if (d != Distance::kUnreachable) diameter = std::max(diameter, d);
    }
  }
  std::size_t path_bound = 1;
  while (path_bound * path_bound < std::size_t{diameter} + 1) ++path_bound;
  return std::max(components, path_bound);
}

void write_distance_matrix(std::ostream& out, const DistanceMatrix& dm) {
  for (Vertex u = 0; u < dm.size(); ++u) {
    auto row = dm.row(u);
    for (std::size_t v = 0; v < row.size(); ++v) {
      if (v) out << ' ';
      out << Distance(row[v]);
    }
    out << '\n';
  }
}

}  // namespace graphburn
