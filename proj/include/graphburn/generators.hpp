#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "graphburn/graph.hpp"

namespace graphburn {

// All generators throw std::invalid_argument on zero sizes.

// Vertices 0..n-1 joined by edges {i, i+1}.
Graph gen_path(std::size_t n);

// w*h lattice, vertex (x, y) has id y*w + x, 4-neighbour edges.
Graph gen_grid2d(std::size_t w, std::size_t h);

// x*y*z lattice, vertex (i, j, k) has id (k*y + j)*x + i, 6-neighbour edges.
Graph gen_grid3d(std::size_t x, std::size_t y, std::size_t z);

/// Preferential-attachment growth. Starts from m isolated vertices; every new
/// vertex links to m distinct earlier vertices drawn with probability
/// proportional to degree + 1. Produces exactly (n - m) * m edges and is a
/// pure function of (n, m, seed). Requires 1 <= m < n.
Graph gen_preferential_attachment(std::size_t n, std::size_t m, std::uint64_t seed);

/// The 14-vertex, three-component worst case for the greedy burner, labelled
/// A..N: a tree A-B-C-D-E with branches C-F-G and C-H-{I,J}, a path K-L-M,
/// and an isolated vertex N.
Graph fixture_tight_example();

/// Builds a graph from a generator shorthand:
///   path:49  grid2:33x33  grid3:10x10x10  ba:1000,2,seed  tight-example
Graph generate_from_spec(const std::string& spec);

}  // namespace graphburn
