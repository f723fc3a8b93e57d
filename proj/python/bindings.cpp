#include <optional>
#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphburn/bench.hpp"
#include "graphburn/error.hpp"
#include "graphburn/exact.hpp"
#include "graphburn/generators.hpp"
#include "graphburn/graph_io.hpp"
#include "graphburn/solvers.hpp"

namespace py = pybind11;
using namespace graphburn;

namespace {

std::optional<std::uint32_t> to_py(Distance d) {
  if (!d.finite()) return std::nullopt;
  return d.hops();
}

Indexing parse_indexing(const std::string& name) {
  if (name == "zero") return Indexing::zero;
  if (name == "one") return Indexing::one;
  if (name == "auto") return Indexing::automatic;
  throw std::invalid_argument("indexing must be zero, one or auto");
}

}  // namespace

PYBIND11_MODULE(_graphburn, m) {
  m.doc() = "Graph burning: greedy farthest-first solvers, an exact oracle and a benchmark harness.";
  m.attr("__version__") = library_version();

  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedFormat>(m, "UnsupportedFormat", parse_error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<NotInSequence>(m, "NotInSequence", PyExc_KeyError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto adj = g.neighbors(v);
        return std::vector<Vertex>(adj.begin(), adj.end());
      })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("name", &Graph::name)
      .def_property_readonly("labels", [](const Graph& g) { return g.labels(); })
      .def("find_label", &Graph::find_label)
      .def("with_labels", &Graph::with_labels)
      .def("__len__", &Graph::num_vertices)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("path", &gen_path, py::arg("n"));
  m.def("grid2d", &gen_grid2d, py::arg("w"), py::arg("h"));
  m.def("grid3d", &gen_grid3d, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("preferential_attachment", &gen_preferential_attachment, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("tight_example", &fixture_tight_example);
  m.def("generate", &generate_from_spec, py::arg("spec"));

  m.def(
      "parse_edge_list",
      [](const std::string& text, const std::string& indexing) {
        return parse_edge_list_string(text, parse_indexing(indexing)).graph;
      },
      py::arg("text"), py::arg("indexing") = "auto");
  m.def(
      "parse_matrix_market", [](const std::string& text) { return parse_matrix_market_string(text).graph; },
      py::arg("text"));
  m.def(
      "read_graph",
      [](const std::string& path, const std::string& format) {
        return read_graph_file(path, parse_graph_format(format)).graph;
      },
      py::arg("path"), py::arg("format") = "mtx");
  m.def("to_edge_list", &to_edge_list_string);
  m.def("connected_components", [](const Graph& g) {
    auto part = connected_components(g);
    return py::make_tuple(part.count, part.component_id);
  });

  py::class_<DistanceMatrix>(m, "DistanceMatrix")
      .def_property_readonly("size", &DistanceMatrix::size)
      .def("__len__", &DistanceMatrix::size)
      .def("at", [](const DistanceMatrix& dm, Vertex u, Vertex v) { return to_py(dm.at(u, v)); })
      .def("__getitem__",
           [](const DistanceMatrix& dm, std::pair<Vertex, Vertex> uv) { return to_py(dm.at(uv.first, uv.second)); })
      .def("tolist", [](const DistanceMatrix& dm) {
        std::vector<std::vector<std::optional<std::uint32_t>>> rows(dm.size());
        for (Vertex u = 0; u < dm.size(); ++u) {
          for (Vertex v = 0; v < dm.size(); ++v) rows[u].push_back(to_py(dm.at(u, v)));
        }
        return rows;
      });

  m.def("apsp", &apsp, py::arg("graph"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def(
      "distance_to_set",
      [](const DistanceMatrix& dm, Vertex v, const std::vector<Vertex>& set) { return to_py(distance_to_set(dm, v, set)); },
      py::arg("dm"), py::arg("v"), py::arg("set"));
  m.def("lower_bound", &eccentricity_lower_bound, py::arg("dm"));

  m.def(
      "verify",
      [](const std::vector<Vertex>& seq, const Graph& g, const DistanceMatrix& dm) { return verify(seq, g, dm); },
      py::arg("sequence"), py::arg("graph"), py::arg("dm"));
  m.def(
      "simulate",
      [](const std::vector<Vertex>& seq, const Graph& g) {
        auto sim = simulate(seq, g, true);
        return py::make_tuple(sim.fully_burned, sim.rounds);
      },
      py::arg("sequence"), py::arg("graph"),
      "Returns (fully_burned, rounds) where rounds[r] is the burned set after round r + 1.");
  m.def(
      "covered_set", [](const std::vector<Vertex>& seq, const DistanceMatrix& dm) { return covered_set(seq, dm); },
      py::arg("sequence"), py::arg("dm"));
  m.def(
      "covering_radius", [](const std::vector<Vertex>& seq, Vertex v) { return covering_radius(seq, v); },
      py::arg("sequence"), py::arg("v"));
  m.def("parse_sequence", &parse_sequence, py::arg("text"), py::arg("graph"));
  m.def(
      "format_sequence", [](const std::vector<Vertex>& seq, const Graph& g) { return format_sequence(seq, g); },
      py::arg("sequence"), py::arg("graph"));

  py::class_<TieBreakPolicy>(m, "TieBreakPolicy")
      .def(py::init<>())
      .def_static("lowest_id", &TieBreakPolicy::lowest_id)
      .def_static("preference_list", &TieBreakPolicy::preference_list, py::arg("order"))
      .def_static("seeded_random", &TieBreakPolicy::seeded_random, py::arg("seed"))
      .def("__repr__", &TieBreakPolicy::describe);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("sequence", &SolveResult::sequence)
      .def_readonly("start_vertex", &SolveResult::start_vertex)
      .def_readonly("iterations", &SolveResult::iterations)
      .def_readonly("valid", &SolveResult::valid)
      .def("__len__", [](const SolveResult& r) { return r.sequence.size(); })
      .def("__repr__", [](const SolveResult& r) {
        return "SolveResult(length=" + std::to_string(r.sequence.size()) + ", start=" + std::to_string(r.start_vertex) +
               ", valid=" + (r.valid ? "True" : "False") + ")";
      });

  m.def(
      "bgp",
      [](const Graph& g, const DistanceMatrix& dm, Vertex start, const TieBreakPolicy& tb) {
        return bgp(g, dm, start, tb);
      },
      py::arg("graph"), py::arg("dm"), py::arg("start"), py::arg("tiebreak") = TieBreakPolicy{});
  m.def("bgp_plus", &bgp_plus, py::arg("graph"), py::arg("dm"), py::arg("tiebreak") = TieBreakPolicy{},
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("alg1_known_b", &alg1_known_b, py::arg("graph"), py::arg("dm"), py::arg("k"), py::arg("first"),
        py::arg("tiebreak") = TieBreakPolicy{});

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("burning_number", &ExactResult::burning_number)
      .def_readonly("witness", &ExactResult::witness)
      .def_readonly("nodes_explored", &ExactResult::nodes_explored)
      .def_readonly("lower_bound", &ExactResult::lower_bound);

  m.def(
      "burning_number_exact",
      [](const Graph& g, std::size_t max_n, std::uint64_t node_budget) {
        ExactLimits limits;
        limits.max_n = max_n;
        limits.node_budget = node_budget;
        return burning_number_exact(g, limits);
      },
      py::arg("graph"), py::arg("max_n") = ExactLimits{}.max_n, py::arg("node_budget") = ExactLimits{}.node_budget,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "is_feasible",
      [](const Graph& g, const DistanceMatrix& dm, std::size_t k, std::uint64_t node_budget) {
        return is_feasible(g, dm, k, node_budget);
      },
      py::arg("graph"), py::arg("dm"), py::arg("k"), py::arg("node_budget") = ExactLimits{}.node_budget,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "run_bench",
      [](const std::string& manifest_path, const std::string& format, bool timing, std::size_t threads) {
        auto report = run_benchmark(load_manifest(manifest_path), threads);
        if (!timing) strip_timing(report);
        return emit_report(report, parse_report_format(format));
      },
      py::arg("manifest"), py::arg("format") = "json", py::arg("timing") = true, py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());
}
