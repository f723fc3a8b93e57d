#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphburn/apsp.hpp"
#include "graphburn/graph.hpp"

namespace graphburn {

// Ordered sources s_1..s_k; the same vertex may appear more than once.
using BurningSequence = std::vector<Vertex>;

/// Burn progress tracked round by round.
///
/// burned_prev() is everything burned before the current round and
/// burned_curr() everything burned so far, so burned_prev is always a subset
/// of burned_curr. Each vertex's neighbourhood is scanned once, in the round
/// after it catches fire.
class BurnState {
 public:
  explicit BurnState(std::size_t n = 0) : burned_at_(n, 0) {}

  /// Plays one round: fire spreads from the vertices that caught in the
  /// previous round, then `source` is lit. Throws std::invalid_argument when
  /// `source` is out of range.
  void advance(const Graph& g, Vertex source);

  std::size_t round() const noexcept { return round_; }
  std::size_t num_vertices() const noexcept { return burned_at_.size(); }
  std::size_t burned_count() const noexcept { return burned_count_; }
  bool all_burned() const noexcept { return burned_count_ == burned_at_.size(); }
  bool is_burned(Vertex v) const { return burned_at_.at(v) != 0; }
  // Round in which v caught fire, 0 if unburned.
  std::size_t burned_in_round(Vertex v) const { return burned_at_.at(v); }

  std::vector<Vertex> burned_prev() const;
  std::vector<Vertex> burned_curr() const;

 private:
  std::vector<std::uint32_t> burned_at_;
  std::vector<Vertex> frontier_;
  std::size_t round_ = 0;
  std::size_t burned_count_ = 0;
};

struct Simulation {
  BurnState state;
  bool fully_burned = false;
  // rounds[r] = burned set after round r+1, only filled when requested.
  std::vector<std::vector<Vertex>> rounds;
};

/// Runs the round-by-round spread for `seq` on g.
Simulation simulate(std::span<const Vertex> seq, const Graph& g, bool record_rounds = false);

/// Union of balls N_{k-i}[s_i] over the sequence, as a sorted vertex list.
/// Applied to a prefix of length r it gives the burned set after round r.
std::vector<Vertex> covered_set(std::span<const Vertex> seq, const DistanceMatrix& dm);

/// True iff the balls of `seq` cover every vertex. The empty sequence covers
/// only the empty graph.
bool verify(std::span<const Vertex> seq, const Graph& g, const DistanceMatrix& dm);

/// k - min Pos(v), with 1-based positions. Throws NotInSequence.
std::size_t covering_radius(std::span<const Vertex> seq, Vertex v);

// 1-based positions of each vertex that occurs in seq.
std::map<Vertex, std::vector<std::size_t>> position_sets(std::span<const Vertex> seq);

/// Parses "C,G,I" or "2,6,8". Tokens naming a label of g resolve to that
/// vertex; anything else must be an in-range integer id.
BurningSequence parse_sequence(std::string_view text, const Graph& g);

// Comma-separated, using labels when g has them.
std::string format_sequence(std::span<const Vertex> seq, const Graph& g);

}  // namespace graphburn
