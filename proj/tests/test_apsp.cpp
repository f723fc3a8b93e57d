#include <random>
#include <sstream>

#include "doctest.h"

#include "graphburn/apsp.hpp"
#include "graphburn/exact.hpp"
#include "graphburn/generators.hpp"
#include "support/oracles.hpp"
#include "support/tight_example_table.hpp"

using namespace graphburn;

namespace {

Vertex id(const Graph& g, const char* label) { return *g.find_label(label); }

}  // namespace

TEST_SUITE("apsp") {
  TEST_CASE("extended distance ordering and addition") {
    const auto inf = Distance::unreachable();
    CHECK(Distance(0) < Distance(1));
    CHECK(Distance(4000000) < inf);
    CHECK(Distance(3) + Distance(4) == Distance(7));
    CHECK(inf + Distance(1) == inf);
    CHECK(Distance(1) + inf == inf);
    CHECK(inf.to_string() == "inf");
  }

  TEST_CASE("path endpoints") {
    auto dm = apsp(gen_path(9));
    CHECK(dm.at(0, 8) == Distance(8));
    CHECK(dm.at(8, 0) == Distance(8));
  }

  TEST_CASE("empty graph") { CHECK(apsp(Graph{}).size() == 0); }

  TEST_CASE("tight example distances") {
    const auto g = fixture_tight_example();
    const auto dm = apsp(g);
    CHECK(dm.at(id(g, "A"), id(g, "E")) == Distance(4));
    CHECK(dm.at(id(g, "A"), id(g, "G")) == Distance(4));
    CHECK(dm.at(id(g, "K"), id(g, "M")) == Distance(2));
    CHECK_FALSE(dm.at(id(g, "N"), id(g, "A")).finite());

    const Vertex nka[] = {id(g, "N"), id(g, "K"), id(g, "A")};
    CHECK(distance_to_set(dm, id(g, "E"), nka) == Distance(4));
    const Vertex nkae[] = {id(g, "N"), id(g, "K"), id(g, "A"), id(g, "E")};
    CHECK(distance_to_set(dm, id(g, "I"), nkae) == Distance(4));
    const Vertex self[] = {id(g, "C")};
    CHECK(distance_to_set(dm, id(g, "C"), self) == Distance(0));
    CHECK_THROWS_AS(distance_to_set(dm, 0, std::span<const Vertex>{}), std::invalid_argument);
  }

  TEST_CASE("tight example: every entry of the prefix table") {
    const auto g = fixture_tight_example();
    const auto dm = apsp(g);
    for (const auto& row : tight_example::table()) {
      std::vector<Vertex> prefix;
      for (char c : row.prefix) prefix.push_back(static_cast<Vertex>(c - 'A'));
      for (Vertex v = 0; v < 14; ++v) {
        const Distance expected = row.distance[v] < 0 ? Distance::unreachable() : Distance(row.distance[v]);
        const Distance got = prefix.empty() ? Distance::unreachable() : distance_to_set(dm, v, prefix);
        INFO("prefix " << row.prefix << " vertex " << g.name(v));
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("matches repeated BFS on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % 100;
      auto rg = oracle::random_graph(rng, n, 2.0 / static_cast<double>(n), trial % 2 == 0);
      const auto g = Graph::from_edges(n, rg.edges);
      const auto dm = apsp(g, 1 + trial % 4);
      const auto ref = oracle::all_pairs(oracle::adjacency(n, rg.edges));
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          const int r = ref[u][v];
          REQUIRE(dm.at(u, v) == (r < 0 ? Distance::unreachable() : Distance(static_cast<Distance::rep>(r))));
        }
      }
    }
  }

  TEST_CASE("metric axioms and reachability") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 40;
      const auto g = Graph::from_edges(n, oracle::random_graph(rng, n, 0.08, false).edges);
      const auto dm = apsp(g);
      const auto part = connected_components(g);
      for (Vertex u = 0; u < n; ++u) {
        REQUIRE(dm.at(u, u) == Distance(0));
        for (Vertex v = 0; v < n; ++v) {
          REQUIRE(dm.at(u, v) == dm.at(v, u));
          REQUIRE(dm.at(u, v).finite() == part.same_component(u, v));
          REQUIRE((dm.at(u, v) == Distance(1)) == g.has_edge(u, v));
          for (Vertex w = 0; w < n; ++w) REQUIRE(dm.at(u, v) <= dm.at(u, w) + dm.at(w, v));
        }
      }
    }
  }

  TEST_CASE("parallel and serial agree") {
    const auto g = gen_grid2d(20, 20);
    CHECK(apsp(g, 1) == apsp(g, 4));
  }

  TEST_CASE("lower bound") {
    CHECK(eccentricity_lower_bound(apsp(fixture_tight_example())) >= 3);
    CHECK(eccentricity_lower_bound(apsp(gen_path(1))) == 1);
    // b(P9) = 3 (exact search below); the bound may not exceed it.
    CHECK(eccentricity_lower_bound(apsp(gen_path(9))) <= 3);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % 7;
      auto rg = oracle::random_graph(rng, n, 0.25, false);
      const auto g = Graph::from_edges(n, rg.edges);
      const int b = oracle::brute_force_burning_number(oracle::all_pairs(oracle::adjacency(n, rg.edges)));
      REQUIRE(eccentricity_lower_bound(apsp(g)) <= static_cast<std::size_t>(b));
    }
  }

  TEST_CASE("matrix dump") {
    std::ostringstream out;
    write_distance_matrix(out, apsp(Graph::from_edges(3, {{0, 1}})));
    CHECK(out.str() == "0 1 inf\n1 0 inf\ninf inf 0\n");
  }
}
