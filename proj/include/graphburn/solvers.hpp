#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "graphburn/apsp.hpp"
#include "graphburn/burning.hpp"
#include "graphburn/graph.hpp"

namespace graphburn {

/// How farthest-first selection picks among several equally far vertices.
///
///   lowest_id        smallest vertex id
///   preference_list  first candidate in the given order; lowest id if none is listed
///   seeded_random    a candidate chosen by hashing (seed, candidate set)
///
/// The choice is a pure function of the policy and the candidate set.
class TieBreakPolicy {
 public:
  struct LowestId {};
  struct Preference {
    std::vector<Vertex> order;
  };
  struct SeededRandom {
    std::uint64_t seed;
  };

  TieBreakPolicy() = default;
  static TieBreakPolicy lowest_id() { return {}; }
  static TieBreakPolicy preference_list(std::vector<Vertex> order);
  static TieBreakPolicy seeded_random(std::uint64_t seed);

  // `candidates` must be non-empty and sorted ascending.
  Vertex choose(std::span<const Vertex> candidates) const;

  // Checks that every listed vertex is < n and appears once.
  void validate(std::size_t n) const;

  std::string describe() const;

 private:
  std::variant<LowestId, Preference, SeededRandom> rule_;
};

struct SolveResult {
  BurningSequence sequence;
  Vertex start_vertex = 0;
  // Farthest-first selections after the start vertex.
  std::size_t iterations = 0;
  bool valid = false;
};

/// argmax_u d(u, selected) under the extended ordering (UNREACHABLE beats
/// every finite distance), ties resolved by `tb`. Once every vertex is
/// selected all candidates sit at distance 0 and any of them may repeat.
/// Throws std::invalid_argument when `selected` is empty.
Vertex farthest_first_step(const DistanceMatrix& dm, std::span<const Vertex> selected,
                           const TieBreakPolicy& tb);

/// Farthest-first prefix of length k from `first`, padded to 3k-2 entries
/// by repeating `first`. Valid whenever k >= b(G).
BurningSequence alg1_known_b(const Graph& g, const DistanceMatrix& dm, std::size_t k, Vertex first,
                             const TieBreakPolicy& tb);

/// One row of a greedy run: state after the first `prefix` selections.
struct BgpTraceRow {
  std::size_t prefix = 0;
  std::vector<Distance> distance_to_selected;
  std::vector<Vertex> burned;
};

/// Greedy burning: keep adding the vertex farthest from those already
/// chosen, advancing the fire one round per addition, until everything
/// burns. When `trace` is given it receives one row per prefix, starting with
/// the empty one. Throws std::invalid_argument on an empty graph or bad start.
SolveResult bgp(const Graph& g, const DistanceMatrix& dm, Vertex first, const TieBreakPolicy& tb,
                std::vector<BgpTraceRow>* trace = nullptr);

/// Runs bgp from every start vertex and keeps the shortest sequence, lowest
/// start id on ties. Starts are spread over `threads` workers (0 = default);
/// the result does not depend on the thread count.
SolveResult bgp_plus(const Graph& g, const DistanceMatrix& dm, const TieBreakPolicy& tb,
                     std::size_t threads = 0);

}  // namespace graphburn
