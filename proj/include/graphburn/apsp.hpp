#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "graphburn/graph.hpp"

namespace graphburn {

/// Hop count extended with an UNREACHABLE value that orders above every
/// finite distance and absorbs addition.
class Distance {
 public:
  using rep = std::uint32_t;
  static constexpr rep kUnreachable = std::numeric_limits<rep>::max();

  constexpr Distance() = default;
  constexpr explicit Distance(rep hops) : value_(hops) {}
  static constexpr Distance unreachable() { return Distance(kUnreachable); }

  constexpr bool finite() const { return value_ != kUnreachable; }
  // Raw hop count; only meaningful when finite().
  constexpr rep hops() const { return value_; }

  friend constexpr auto operator<=>(Distance, Distance) = default;
  friend constexpr Distance operator+(Distance a, Distance b) {
    if (!a.finite() || !b.finite()) return unreachable();
    return Distance(a.value_ + b.value_);
  }

  std::string to_string() const;

 private:
  rep value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Distance d);

/// Dense all-pairs hop distances. Row-major n*n storage, so memory grows as
/// 4*n^2 bytes; graphs beyond roughly 20000 vertices do not fit.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, Distance::kUnreachable) {}

  std::size_t size() const noexcept { return n_; }
  Distance at(Vertex u, Vertex v) const { return Distance(d_[index(u, v)]); }
  std::span<const Distance::rep> row(Vertex u) const { return {d_.data() + std::size_t{u} * n_, n_}; }
  std::span<Distance::rep> row(Vertex u) { return {d_.data() + std::size_t{u} * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Distance::rep> d_;
};

/// One breadth-first search per source. Sources are split over `threads`
/// workers (0 = default_thread_count()).
DistanceMatrix apsp(const Graph& g, std::size_t threads = 0);

/// Minimum distance from v to any member of `set`. Throws std::invalid_argument on an empty set.
Distance distance_to_set(const DistanceMatrix& dm, Vertex v, std::span<const Vertex> set);

/// A lower bound on the burning number that never exceeds it.
///
/// Fire cannot cross components, so b >= component count. Inside a component
/// of diameter D a shortest path on D+1 vertices is isometric, and a ball of
/// radius r meets it in at most 2r+1 vertices; k sources cover at most
/// sum_{r<k}(2r+1) = k^2 of them, so b >= ceil(sqrt(D+1)).
std::size_t eccentricity_lower_bound(const DistanceMatrix& dm);

// Debug dump: one row per line, space-separated, "inf" for UNREACHABLE.
void write_distance_matrix(std::ostream& out, const DistanceMatrix& dm);

}  // namespace graphburn
