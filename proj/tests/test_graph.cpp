#include <random>
#include <sstream>

#include "doctest.h"

#include "graphburn/error.hpp"
#include "graphburn/generators.hpp"
#include "graphburn/graph.hpp"
#include "graphburn/graph_io.hpp"
#include "support/oracles.hpp"

using namespace graphburn;

namespace {

void check_canonical(const Graph& g) {
  std::size_t directed = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto adj = g.neighbors(v);
    directed += adj.size();
    for (std::size_t i = 0; i < adj.size(); ++i) {
      REQUIRE(adj[i] < g.num_vertices());
      REQUIRE(adj[i] != v);
      if (i) REQUIRE(adj[i - 1] < adj[i]);
      REQUIRE(g.has_edge(adj[i], v));
    }
  }
  REQUIRE(directed == 2 * g.num_edges());
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("edge list: one-indexed path") {
    auto parsed = parse_edge_list_string("1 2\n2 3", Indexing::one);
    CHECK(parsed.graph.num_vertices() == 3);
    CHECK(parsed.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  }

  TEST_CASE("edge list: loops and duplicates are dropped and counted") {
    auto parsed = parse_edge_list_string("0 0\n0 1\n0 1", Indexing::zero);
    CHECK(parsed.graph.num_vertices() == 2);
    CHECK(parsed.graph.num_edges() == 1);
    CHECK(parsed.dropped.self_loops == 1);
    CHECK(parsed.dropped.duplicates == 1);
  }

  TEST_CASE("edge list: automatic indexing") {
    CHECK(parse_edge_list_string("1 2\n2 3").graph.num_vertices() == 3);
    CHECK(parse_edge_list_string("0 1\n1 2").graph.num_vertices() == 3);
    // 0 appears, so ids are taken as zero-based even though 1 is present.
    CHECK(parse_edge_list_string("1 2\n0 2").graph.num_vertices() == 3);
  }

  TEST_CASE("edge list: comments and weights") {
    auto parsed = parse_edge_list_string("% header\n# another\n1 2 0.5\n\n2 3 7\n");
    CHECK(parsed.graph.num_edges() == 2);
  }

  TEST_CASE("edge list: body of a 49-vertex path file") {
    std::ostringstream body;
    for (int i = 1; i < 49; ++i) body << i << ' ' << i + 1 << '\n';
    auto g = parse_edge_list_string(body.str()).graph;
    CHECK(g.num_vertices() == 49);
    CHECK(g.num_edges() == 48);
  }

  TEST_CASE("edge list: errors carry line numbers") {
    try {
      parse_edge_list_string("1 2\n2 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list_string("1 -2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list_string("1 2 3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list_string("0 1\n", Indexing::one), ParseError);
  }

  TEST_CASE("matrix market: path") {
    auto g = parse_matrix_market_string("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n1 2\n2 3\n").graph;
    CHECK(g.num_vertices() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  }

  TEST_CASE("matrix market: weighted variant and comments") {
    auto g = parse_matrix_market_string(
                 "%%MatrixMarket matrix coordinate real symmetric\n% comment\n4 4 3\n2 1 1.5\n3 2 2\n4 4 1\n")
                 .graph;
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 2);
  }

  TEST_CASE("matrix market: 643 x 643 with 2280 entries") {
    // Distinct lower-triangle pairs on 643 vertices: a path plus chords.
    std::ostringstream text;
    text << "%%MatrixMarket matrix coordinate pattern symmetric\n643 643 2280\n";
    std::size_t written = 0;
    for (int stride = 1; written < 2280; ++stride) {
      for (int i = 1; i + stride <= 643 && written < 2280; ++i, ++written) {
        text << i + stride << ' ' << i << '\n';
      }
    }
    auto g = parse_matrix_market_string(text.str()).graph;
    CHECK(g.num_vertices() == 643);
    CHECK(g.num_edges() == 2280);
  }

  TEST_CASE("matrix market: unsupported and malformed") {
    CHECK_THROWS_AS(parse_matrix_market_string("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n"),
                    UnsupportedFormat);
    CHECK_THROWS_AS(parse_matrix_market_string("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n"),
                    UnsupportedFormat);
    CHECK_THROWS_AS(parse_matrix_market_string("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n4 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_market_string("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n"),
                    ParseError);
  }

  TEST_CASE("generators: closed-form sizes") {
    CHECK(gen_path(9).num_edges() == 8);
    CHECK(gen_path(49).num_vertices() == 49);
    CHECK(gen_path(49).num_edges() == 48);
    CHECK(gen_path(1).num_edges() == 0);
    CHECK(gen_grid2d(33, 33).num_vertices() == 1089);
    CHECK(gen_grid2d(33, 33).num_edges() == 2112);
    CHECK(gen_grid2d(1, 5) == gen_path(5));
    CHECK(gen_grid2d(2, 2).num_edges() == 4);
    CHECK(gen_grid3d(10, 10, 10).num_vertices() == 1000);
    CHECK(gen_grid3d(10, 10, 10).num_edges() == 2700);
    CHECK(gen_grid3d(1, 1, 1).num_vertices() == 1);
    CHECK(gen_grid3d(1, 1, 9) == gen_path(9));
    for (std::size_t w = 1; w <= 6; ++w) {
      for (std::size_t h = 1; h <= 6; ++h) {
        CHECK(gen_grid2d(w, h).num_edges() == (w - 1) * h + w * (h - 1));
      }
    }
  }

  TEST_CASE("generators: zero sizes rejected") {
    CHECK_THROWS_AS(gen_path(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_grid2d(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_grid3d(2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_preferential_attachment(5, 5, 1), std::invalid_argument);
  }

  TEST_CASE("generators: preferential attachment") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
      auto g = gen_preferential_attachment(1000, 2, seed);
      CHECK(g.num_vertices() == 1000);
      CHECK(g.num_edges() == 1996);
      check_canonical(g);
    }
    auto tree = gen_preferential_attachment(3, 1, 7);
    CHECK(tree.num_edges() == 2);
    CHECK(connected_components(tree).count == 1);
    CHECK(gen_preferential_attachment(200, 3, 99) == gen_preferential_attachment(200, 3, 99));
    CHECK(gen_preferential_attachment(200, 3, 99) != gen_preferential_attachment(200, 3, 100));
  }

  TEST_CASE("generators: canonical form") {
    check_canonical(gen_grid2d(7, 5));
    check_canonical(gen_grid3d(3, 4, 5));
    check_canonical(fixture_tight_example());
  }

  TEST_CASE("generator specs") {
    CHECK(generate_from_spec("path:49") == gen_path(49));
    CHECK(generate_from_spec("grid2:33x33") == gen_grid2d(33, 33));
    CHECK(generate_from_spec("grid3:10x10x10") == gen_grid3d(10, 10, 10));
    CHECK(generate_from_spec("ba:100,2,5") == gen_preferential_attachment(100, 2, 5));
    CHECK(generate_from_spec("tight-example") == fixture_tight_example());
    CHECK_THROWS_AS(generate_from_spec("grid2:3"), std::invalid_argument);
    CHECK_THROWS_AS(generate_from_spec("nope:3"), std::invalid_argument);
    CHECK_THROWS_AS(generate_from_spec("path:x"), std::invalid_argument);
  }

  TEST_CASE("tight example fixture") {
    const auto g = fixture_tight_example();
    CHECK(g.num_vertices() == 14);
    CHECK(g.num_edges() == 11);
    CHECK(g.name(0) == "A");
    CHECK(g.find_label("N") == Vertex{13});
    CHECK(connected_components(g).count == 3);
  }

  TEST_CASE("connected components") {
    CHECK(connected_components(gen_path(9)).count == 1);
    CHECK(connected_components(Graph::from_edges(4, {})).count == 4);
    CHECK(connected_components(Graph{}).count == 0);

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 200;
      const double p = 1.5 / static_cast<double>(n) * static_cast<double>(rng() % 3);
      auto rg = oracle::random_graph(rng, n, p, false);
      auto g = Graph::from_edges(n, rg.edges);
      auto part = connected_components(g);
      REQUIRE(part.count == oracle::union_find_components(n, rg.edges));
      for (auto [u, v] : rg.edges) REQUIRE(part.same_component(u, v));
      for (auto id : part.component_id) REQUIRE(id < part.count);
    }
  }

  TEST_CASE("labels") {
    auto g = gen_path(3);
    CHECK_THROWS_AS(g.with_labels({"a", "b"}), std::invalid_argument);
    CHECK_THROWS_AS(g.with_labels({"a", "a", "c"}), std::invalid_argument);
    CHECK_THROWS_AS(g.with_labels({"a", "b,c", "d"}), std::invalid_argument);
    auto l = g.with_labels({"x", "y", "z"});
    CHECK(l.name(2) == "z");
    CHECK(g.name(2) == "2");
  }

  TEST_CASE("canonical serialization round-trips") {
    std::mt19937_64 rng(7);
    std::vector<Graph> samples = {fixture_tight_example(), gen_path(1), Graph{}, Graph::from_edges(5, {{1, 2}})};
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + rng() % 40;
      samples.push_back(Graph::from_edges(n, oracle::random_graph(rng, n, 0.1, false).edges));
    }
    for (const auto& g : samples) {
      const auto text = to_edge_list_string(g);
      const auto back = parse_edge_list_string(text).graph;
      REQUIRE(back == g);
      REQUIRE(to_edge_list_string(back) == text);
    }
  }
}
