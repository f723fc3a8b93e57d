#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "graphburn/apsp.hpp"
#include "graphburn/burning.hpp"
#include "graphburn/graph.hpp"

namespace graphburn {

struct ExactLimits {
  std::size_t max_n = 20;
  // Largest k tried; 0 means n (b(G) <= n always holds).
  std::size_t max_k = 0;
  std::uint64_t node_budget = 50'000'000;
};

struct ExactResult {
  std::size_t burning_number = 0;
  BurningSequence witness;
  std::uint64_t nodes_explored = 0;
  // Where the upward search on k started.
  std::size_t lower_bound = 0;
};

/// Searches for a length-k sequence whose balls cover V.
///
/// Positions are filled from the largest radius down. At each position only
/// vertices whose ball reaches an uncovered vertex are tried, and a candidate
/// whose newly covered set is contained in another's is skipped. A branch is
/// cut when the uncovered vertices hold more pairwise-far points (distance
/// > 2r, r the largest remaining radius) than there are positions left.
///
/// Returns nullopt if no such sequence exists. Throws BudgetExceeded once
/// more than `node_budget` search nodes have been expanded; `nodes`, when
/// given, accumulates the count.
std::optional<BurningSequence> is_feasible(const Graph& g, const DistanceMatrix& dm, std::size_t k,
                                           std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max(),
                                           std::uint64_t* nodes = nullptr);

/// Smallest k with a feasible sequence, searching upward from
/// eccentricity_lower_bound. Throws BudgetExceeded when n > max_n, when the
/// node budget runs out or when no k <= max_k works, and
/// std::invalid_argument on an empty graph.
ExactResult burning_number_exact(const Graph& g, const DistanceMatrix& dm, const ExactLimits& limits = {});
ExactResult burning_number_exact(const Graph& g, const ExactLimits& limits = {});

}  // namespace graphburn
