#include <random>

#include "doctest.h"

#include "graphburn/error.hpp"
#include "graphburn/exact.hpp"
#include "graphburn/generators.hpp"
#include "support/oracles.hpp"

using namespace graphburn;

TEST_SUITE("exact-oracle") {
  TEST_CASE("path on nine vertices") {
    const auto g = gen_path(9);
    const auto dm = apsp(g);
    const auto res = burning_number_exact(g, dm);
    CHECK(res.burning_number == 3);
    CHECK(res.witness.size() == 3);
    CHECK(verify(res.witness, g, dm));
    CHECK_FALSE(is_feasible(g, dm, 2).has_value());

    // All 81 ordered pairs fail, checked without the library search.
    const auto d = oracle::all_pairs(oracle::adjacency(9, g.edges()));
    for (int a = 0; a < 9; ++a) {
      for (int b = 0; b < 9; ++b) CHECK_FALSE(oracle::covers(d, {a, b}));
    }
  }

  TEST_CASE("tight example") {
    const auto g = fixture_tight_example();
    const auto dm = apsp(g);
    const auto res = burning_number_exact(g, dm);
    CHECK(res.burning_number == 3);
    CHECK(verify(res.witness, g, dm));
    CHECK(verify(parse_sequence("C,L,N", g), g, dm));
    CHECK_FALSE(is_feasible(g, dm, 2).has_value());
    CHECK(res.lower_bound >= 3);
  }

  TEST_CASE("small closed forms") {
    const auto k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(burning_number_exact(k4).burning_number == 2);
    CHECK(burning_number_exact(gen_path(1)).burning_number == 1);
    CHECK(burning_number_exact(Graph::from_edges(5, {})).burning_number == 5);
    // b(P_n) = ceil(sqrt(n))
    for (std::size_t n = 1; n <= 17; ++n) {
      std::size_t r = 0;
      while (r * r < n) ++r;
      CHECK(burning_number_exact(gen_path(n)).burning_number == r);
    }
  }

  TEST_CASE("feasibility is monotone in k") {
    const auto g = gen_grid2d(3, 4);
    const auto dm = apsp(g);
    const auto b = burning_number_exact(g, dm).burning_number;
    for (std::size_t k = 1; k <= g.num_vertices(); ++k) {
      const auto seq = is_feasible(g, dm, k);
      CHECK(seq.has_value() == (k >= b));
      if (seq) {
        CHECK(seq->size() == k);
        CHECK(verify(*seq, g, dm));
      }
    }
  }

  TEST_CASE("agrees with exhaustive enumeration") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + rng() % 7;
      const double p = 0.1 + 0.15 * static_cast<double>(rng() % 4);
      auto rg = oracle::random_graph(rng, n, p, trial % 2 == 0);
      const auto g = Graph::from_edges(n, rg.edges);
      const auto dm = apsp(g);
      const auto d = oracle::all_pairs(oracle::adjacency(n, rg.edges));
      const auto res = burning_number_exact(g, dm);
      REQUIRE(static_cast<int>(res.burning_number) == oracle::brute_force_burning_number(d));
      std::vector<int> w(res.witness.begin(), res.witness.end());
      REQUIRE(oracle::covers(d, w));
      REQUIRE(res.lower_bound <= res.burning_number);
    }
  }

  TEST_CASE("witness balls stay within radius b - 1") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % 14;
      const auto g = Graph::from_edges(n, oracle::random_graph(rng, n, 0.2, trial % 3 != 0).edges);
      const auto dm = apsp(g);
      const auto res = burning_number_exact(g, dm);
      for (Vertex v = 0; v < n; ++v) {
        REQUIRE(distance_to_set(dm, v, res.witness) <= Distance(static_cast<Distance::rep>(res.burning_number - 1)));
      }
    }
  }

  TEST_CASE("limits") {
    CHECK_THROWS_AS(burning_number_exact(gen_path(21)), BudgetExceeded);
    CHECK_THROWS_AS(burning_number_exact(Graph{}), std::invalid_argument);
    ExactLimits tiny;
    tiny.node_budget = 1;
    CHECK_THROWS_AS(burning_number_exact(gen_grid2d(4, 4), tiny), BudgetExceeded);
    ExactLimits capped;
    capped.max_k = 2;
    CHECK_THROWS_AS(burning_number_exact(gen_path(9), capped), BudgetExceeded);
    ExactLimits large;
    large.max_n = 64;
    CHECK(burning_number_exact(gen_path(49), large).burning_number == 7);
  }

  TEST_CASE("node counter accumulates") {
    const auto g = gen_path(9);
    std::uint64_t nodes = 0;
    is_feasible(g, apsp(g), 3, 1000000, &nodes);
    CHECK(nodes > 0);
  }
}
