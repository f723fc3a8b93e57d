#include "graphburn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <set>

#include "graphburn/apsp.hpp"
#include "graphburn/burning.hpp"
#include "graphburn/error.hpp"
#include "graphburn/exact.hpp"
#include "graphburn/generators.hpp"
#include "graphburn/solvers.hpp"

#ifndef GRAPHBURN_VERSION
#define GRAPHBURN_VERSION "0.0.0"
#endif

namespace graphburn {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t to_u64(const std::string& value, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + value + "'");
  }
  return v;
}

bool to_bool(const std::string& value, std::size_t line_no) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw ParseError(line_no, "expected true or false, got '" + value + "'");
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void set_instance_key(InstanceSpec& inst, const std::string& key, const std::string& value, std::size_t line_no) {
  if (key == "generator") inst.generator = value;
  else if (key == "file") inst.file = value;
  else if (key == "format") {
    try {
      inst.format = parse_graph_format(value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  } else if (key == "optional") inst.optional = to_bool(value, line_no);
  else if (key == "vertices") inst.expect_vertices = to_u64(value, line_no);
  else if (key == "edges") inst.expect_edges = to_u64(value, line_no);
  else if (key == "burning_number") inst.burning_number = to_u64(value, line_no);
  else if (key == "published.bonato") inst.published.bonato = to_u64(value, line_no);
  else if (key == "published.gaflss") inst.published.gaflss = to_u64(value, line_no);
  else if (key == "published.bgp") inst.published.bgp = to_u64(value, line_no);
  else if (key == "published.bgp_plus") inst.published.bgp_plus = to_u64(value, line_no);
  else throw ParseError(line_no, "unknown instance key '" + key + "'");
}

void set_global_key(BenchManifest& m, const std::string& key, const std::string& value, std::size_t line_no) {
  if (key == "seed") m.seed = to_u64(value, line_no);
  else if (key == "runs_per_instance") {
    m.runs_per_instance = to_u64(value, line_no);
    if (m.runs_per_instance == 0) throw ParseError(line_no, "runs_per_instance must be positive");
  } else if (key == "algorithms") {
    m.algorithms.clear();
    std::size_t start = 0;
    while (start <= value.size()) {
      auto comma = value.find(',', start);
      if (comma == std::string::npos) comma = value.size();
      const auto name = trim(value.substr(start, comma - start));
      try {
        m.algorithms.push_back(parse_algorithm(name));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      start = comma + 1;
    }
  } else if (key == "tiebreak") {
    if (value == "lowest") m.tiebreak = TieBreakMode::lowest;
    else if (value == "random") m.tiebreak = TieBreakMode::random;
    else throw ParseError(line_no, "tiebreak must be lowest or random");
  } else {
    throw ParseError(line_no, "unknown key '" + key + "'");
  }
}

struct Tally {
  std::size_t best = 0, worst = 0, runs = 0, total = 0;

  void add(std::size_t length) {
    best = runs == 0 ? length : std::min(best, length);
    worst = std::max(worst, length);
    total += length;
    ++runs;
  }
};

}  // namespace

const char* library_version() { return GRAPHBURN_VERSION; }

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::bgp: return "bgp";
    case Algorithm::bgp_plus: return "bgp_plus";
    case Algorithm::alg1: return "alg1";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "bgp") return Algorithm::bgp;
  if (name == "bgp_plus" || name == "bgp+") return Algorithm::bgp_plus;
  if (name == "alg1") return Algorithm::alg1;
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected bgp, bgp+ or alg1)");
}

BenchManifest parse_manifest(std::istream& in, const std::string& base_dir) {
  BenchManifest m;
  m.base_dir = base_dir;
  std::set<std::string> names;
  InstanceSpec* current = nullptr;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      const auto name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) throw ParseError(line_no, "empty instance name");
      if (!names.insert(name).second) throw ParseError(line_no, "duplicate instance '" + name + "'");
      m.instances.push_back({});
      current = &m.instances.back();
      current->name = name;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (current != nullptr) set_instance_key(*current, key, value, line_no);
    else set_global_key(m, key, value, line_no);
  }
  for (const auto& inst : m.instances) {
    if (inst.generator.empty() == inst.file.empty()) {
      throw ParseError(0, "instance '" + inst.name + "' needs exactly one of generator or file");
    }
  }
  return m;
}

BenchManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");
  return parse_manifest(in, std::filesystem::path(path).parent_path().string());
}

BenchReport run_benchmark(const BenchManifest& manifest, std::size_t threads) {
  BenchReport report;
  report.version = library_version();
  report.seed = manifest.seed;
  report.runs_per_instance = manifest.runs_per_instance;
  report.tiebreak = manifest.tiebreak == TieBreakMode::random ? "random" : "lowest";
  for (auto a : manifest.algorithms) report.algorithms.push_back(to_string(a));

  for (const auto& inst : manifest.instances) {
    InstanceReport row;
    row.name = inst.name;
    row.published = inst.published;

    Graph g;
    try {
      if (!inst.generator.empty()) {
        g = generate_from_spec(inst.generator);
      } else {
        std::filesystem::path path(inst.file);
        if (path.is_relative() && !manifest.base_dir.empty()) path = std::filesystem::path(manifest.base_dir) / path;
        if (!std::filesystem::exists(path)) {
          row.status = inst.optional ? "skipped" : "error";
          row.message = "file not found: " + path.string();
          report.instances.push_back(std::move(row));
          continue;
        }
        g = read_graph_file(path.string(), inst.format).graph;
      }
    } catch (const std::exception& e) {
      row.status = "error";
      row.message = e.what();
      report.instances.push_back(std::move(row));
      continue;
    }
    row.vertices = g.num_vertices();
    row.edges = g.num_edges();
    if (g.num_vertices() == 0) {
      row.status = "error";
      row.message = "empty graph";
      report.instances.push_back(std::move(row));
      continue;
    }
    if ((inst.expect_vertices && *inst.expect_vertices != row.vertices) ||
        (inst.expect_edges && *inst.expect_edges != row.edges)) {
      row.status = "flagged";
      row.message = "expected " + (inst.expect_vertices ? std::to_string(*inst.expect_vertices) : "?") + "/" +
                    (inst.expect_edges ? std::to_string(*inst.expect_edges) : "?") + " vertices/edges";
    }

    const DistanceMatrix dm = apsp(g, threads);
    const std::uint64_t instance_seed = mix(manifest.seed ^ fnv1a(inst.name));
    auto policy_for = [&](std::uint64_t run_seed) {
      return manifest.tiebreak == TieBreakMode::random ? TieBreakPolicy::seeded_random(run_seed)
                                                       : TieBreakPolicy::lowest_id();
    };
    auto start_for = [&](std::size_t run) {
      return static_cast<Vertex>(mix(instance_seed + run) % g.num_vertices());
    };

    for (auto algo : manifest.algorithms) {
      AlgorithmStats stats;
      stats.algorithm = to_string(algo);
      Tally tally;
      auto count = [&](const BurningSequence& seq) {
        if (verify(seq, g, dm)) tally.add(seq.size());
        else row.verified = false;
      };
      const auto t0 = std::chrono::steady_clock::now();
      switch (algo) {
        case Algorithm::bgp:
          for (std::size_t r = 0; r < manifest.runs_per_instance; ++r) {
            count(bgp(g, dm, start_for(r), policy_for(mix(instance_seed ^ (r + 1)))).sequence);
          }
          break;
        case Algorithm::bgp_plus:
          count(bgp_plus(g, dm, policy_for(instance_seed), threads).sequence);
          break;
        case Algorithm::alg1: {
          std::optional<std::size_t> b = inst.burning_number;
          if (!b) {
            try {
              b = burning_number_exact(g, dm).burning_number;
            } catch (const BudgetExceeded&) {
              stats.note = "burning number unknown";
            }
          }
          if (b) {
            for (std::size_t r = 0; r < manifest.runs_per_instance; ++r) {
              count(alg1_known_b(g, dm, *b, start_for(r), policy_for(mix(instance_seed ^ (r + 1)))));
            }
          }
          break;
        }
      }
      const auto t1 = std::chrono::steady_clock::now();
      stats.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      stats.best = tally.best;
      stats.worst = tally.worst;
      stats.runs = tally.runs;
      stats.mean = tally.runs == 0 ? 0.0 : static_cast<double>(tally.total) / static_cast<double>(tally.runs);
      row.results.push_back(std::move(stats));
    }
    if (!row.verified) report.failed = true;
    report.instances.push_back(std::move(row));
  }
  return report;
}

void strip_timing(BenchReport& report) {
  for (auto& inst : report.instances) {
    for (auto& r : inst.results) r.wall_time_ms = 0.0;
  }
}

}  // namespace graphburn
