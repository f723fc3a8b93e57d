#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphburn/apsp.hpp"
#include "graphburn/bench.hpp"
#include "graphburn/burning.hpp"
#include "graphburn/error.hpp"
#include "graphburn/exact.hpp"
#include "graphburn/generators.hpp"
#include "graphburn/graph_io.hpp"
#include "graphburn/solvers.hpp"

namespace graphburn::cli {
namespace {

// Raised for bad flag values discovered after CLI11 parsing; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string format;
  std::string generator;

  void attach(CLI::App& cmd) {
    auto* in = cmd.add_option("-i,--input", path, "graph file");
    auto* gen = cmd.add_option("-g,--gen", generator,
                               "generator: path:N, grid2:WxH, grid3:XxYxZ, ba:N,M[,SEED], tight-example");
    in->excludes(gen);
    cmd.add_option("-f,--format", format, "input format: edgelist or mtx (default from extension)")
        ->check(CLI::IsMember({"edgelist", "mtx"}));
  }

  Graph load() const {
    if (path.empty() == generator.empty()) throw UsageError("exactly one of --input or --gen is required");
    if (!generator.empty()) {
      try {
        return generate_from_spec(generator);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    GraphFormat fmt = std::filesystem::path(path).extension() == ".mtx" ? GraphFormat::matrix_market
                                                                         : GraphFormat::edge_list;
    if (!format.empty()) fmt = parse_graph_format(format);
    return read_graph_file(path, fmt).graph;
  }
};

Vertex resolve_vertex(const Graph& g, const std::string& token) {
  try {
    auto seq = parse_sequence(token, g);
    if (seq.size() != 1) throw UsageError("expected a single vertex, got '" + token + "'");
    return seq.front();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

TieBreakPolicy resolve_tiebreak(const Graph& g, const std::string& spec, std::uint64_t seed) {
  if (spec == "lowest") return TieBreakPolicy::lowest_id();
  if (spec == "random") return TieBreakPolicy::seeded_random(seed);
  if (spec.rfind("pref:", 0) == 0) {
    try {
      auto policy = TieBreakPolicy::preference_list(parse_sequence(spec.substr(5), g));
      policy.validate(g.num_vertices());
      return policy;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown tie-break '" + spec + "' (expected lowest, random or pref:V1,V2,...)");
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph burning solvers: greedy farthest-first approximation, verification and exact search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("graphburn ") + library_version());

  // solve
  InputOptions solve_in;
  std::string algo = "bgp+";
  std::string start_token;
  std::string tiebreak = "lowest";
  std::uint64_t seed = 0;
  std::size_t k = 0;
  std::size_t threads = 0;
  std::string solve_out = "table";
  auto* solve = app.add_subcommand("solve", "run a solver and print the burning sequence");
  solve_in.attach(*solve);
  solve->add_option("-a,--algo", algo, "bgp, bgp+ or alg1")->check(CLI::IsMember({"bgp", "bgp+", "bgp_plus", "alg1"}));
  solve->add_option("-s,--start", start_token, "start vertex (label or id, default 0)");
  solve->add_option("-t,--tiebreak", tiebreak, "lowest, random or pref:V1,V2,...");
  solve->add_option("--seed", seed, "seed for the random tie-break");
  solve->add_option("-k", k, "burning number for alg1 (default: exact search)");
  solve->add_option("--threads", threads, "worker threads (default GRAPHBURN_THREADS or all cores)");
  solve->add_option("-o,--out", solve_out, "table or json")->check(CLI::IsMember({"table", "json"}));

  // verify
  InputOptions verify_in;
  std::string seq_text;
  auto* verify_cmd = app.add_subcommand("verify", "check whether a sequence burns the whole graph");
  verify_in.attach(*verify_cmd);
  verify_cmd->add_option("--seq", seq_text, "comma-separated labels or ids, e.g. C,G,I")->required();

  // exact
  InputOptions exact_in;
  ExactLimits limits;
  bool allow_large = false;
  auto* exact = app.add_subcommand("exact", "compute the burning number exactly (small graphs)");
  exact_in.attach(*exact);
  exact->add_option("--max-n", limits.max_n, "refuse graphs with more vertices");
  exact->add_option("--budget", limits.node_budget, "search node budget");
  exact->add_flag("--allow-large", allow_large, "lift the vertex limit");

  // bench
  std::string manifest_path = "bench/table2.manifest";
  std::string bench_out = "table";
  std::string bench_file;
  bool no_timing = false;
  std::size_t bench_threads = 0;
  auto* bench = app.add_subcommand("bench", "run a benchmark manifest");
  bench->add_option("-m,--manifest", manifest_path, "manifest file");
  bench->add_option("-o,--out", bench_out, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  bench->add_option("--output", bench_file, "write the report to this file instead of stdout");
  bench->add_flag("--no-timing", no_timing, "zero wall-time fields (byte-stable reports)");
  bench->add_option("--threads", bench_threads, "worker threads");

  // gen
  std::string gen_spec;
  std::string gen_file;
  bool gen_distances = false;
  auto* gen = app.add_subcommand("gen", "write a generated graph as a canonical edge list");
  gen->add_option("-g,--gen", gen_spec, "generator spec")->required();
  gen->add_option("--output", gen_file, "output file (default stdout)");
  gen->add_flag("--distances", gen_distances, "print the all-pairs distance matrix instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      const Graph g = solve_in.load();
      if (g.num_vertices() == 0) throw UsageError("graph has no vertices");
      const Vertex start = start_token.empty() ? 0 : resolve_vertex(g, start_token);
      const auto tb = resolve_tiebreak(g, tiebreak, seed);
      const DistanceMatrix dm = apsp(g, threads);

      SolveResult result;
      if (algo == "bgp") {
        result = bgp(g, dm, start, tb);
      } else if (algo == "alg1") {
        const std::size_t b = k != 0 ? k : burning_number_exact(g, dm).burning_number;
        result.sequence = alg1_known_b(g, dm, b, start, tb);
        result.start_vertex = start;
        result.iterations = b - 1;
        result.valid = verify(result.sequence, g, dm);
      } else {
        result = bgp_plus(g, dm, tb, threads);
      }

      if (solve_out == "json") {
        nlohmann::ordered_json j;
        j["algorithm"] = algo;
        j["sequence"] = nlohmann::json::array();
        for (Vertex v : result.sequence) j["sequence"].push_back(g.name(v));
        j["length"] = result.sequence.size();
        j["start"] = g.name(result.start_vertex);
        j["verified"] = result.valid;
        out << j.dump(2) << '\n';
      } else {
        out << "sequence: " << format_sequence(result.sequence, g) << '\n';
        out << "length: " << result.sequence.size() << '\n';
        out << "start: " << g.name(result.start_vertex) << '\n';
        out << "verified: " << (result.valid ? "true" : "false") << '\n';
      }
      return result.valid ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      const Graph g = verify_in.load();
      BurningSequence seq;
      try {
        seq = parse_sequence(seq_text, g);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const bool ok = verify(seq, g, apsp(g));
      out << (ok ? "valid" : "invalid") << '\n';
      return ok ? 0 : 1;
    }

    if (exact->parsed()) {
      const Graph g = exact_in.load();
      if (allow_large) limits.max_n = std::numeric_limits<std::size_t>::max();
      try {
        const auto r = burning_number_exact(g, limits);
        out << "b(G) = " << r.burning_number << '\n';
        out << "witness: " << format_sequence(r.witness, g) << '\n';
        out << "nodes explored: " << r.nodes_explored << '\n';
        return 0;
      } catch (const BudgetExceeded& e) {
        out << "budget-exceeded: " << e.what() << '\n';
        return 1;
      }
    }

    if (bench->parsed()) {
      const auto manifest = load_manifest(manifest_path);
      auto report = run_benchmark(manifest, bench_threads);
      if (no_timing) strip_timing(report);
      write_text(bench_file, emit_report(report, parse_report_format(bench_out)), out);
      const bool errors = std::any_of(report.instances.begin(), report.instances.end(),
                                      [](const InstanceReport& i) { return i.status == "error"; });
      return report.failed || errors ? 1 : 0;
    }

    if (gen->parsed()) {
      Graph g;
      try {
        g = generate_from_spec(gen_spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::ostringstream text;
      if (gen_distances) write_distance_matrix(text, apsp(g));
      else write_edge_list(text, g);
      write_text(gen_file, text.str(), out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace graphburn::cli
