#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphburn/graph_io.hpp"

namespace graphburn {

enum class Algorithm { bgp, bgp_plus, alg1 };

std::string to_string(Algorithm a);
// Accepts "bgp", "bgp_plus"/"bgp+", "alg1".
Algorithm parse_algorithm(const std::string& name);

// Reference lengths copied from earlier studies; juxtaposed, never computed.
struct PublishedLengths {
  std::optional<std::size_t> bonato;
  std::optional<std::size_t> gaflss;
  std::optional<std::size_t> bgp;
  std::optional<std::size_t> bgp_plus;

  bool any() const { return bonato || gaflss || bgp || bgp_plus; }
  friend bool operator==(const PublishedLengths&, const PublishedLengths&) = default;
};

struct InstanceSpec {
  std::string name;
  // Exactly one of generator / file is set.
  std::string generator;
  std::string file;
  GraphFormat format = GraphFormat::matrix_market;
  // A missing optional file yields a "skipped" row instead of an error.
  bool optional = false;
  std::optional<std::size_t> expect_vertices;
  std::optional<std::size_t> expect_edges;
  // Known burning number, used by alg1 on graphs too large for the exact oracle.
  std::optional<std::size_t> burning_number;
  PublishedLengths published;
};

enum class TieBreakMode { lowest, random };

struct BenchManifest {
  std::vector<InstanceSpec> instances;
  std::vector<Algorithm> algorithms{Algorithm::bgp, Algorithm::bgp_plus};
  std::size_t runs_per_instance = 1;
  std::uint64_t seed = 0;
  TieBreakMode tiebreak = TieBreakMode::lowest;
  // Relative file paths resolve against this directory.
  std::string base_dir;
};

/// Reads the manifest syntax:
///
///   # comment
///   seed = 20210601
///   runs_per_instance = 10
///   algorithms = bgp, bgp_plus
///   tiebreak = lowest            (or random)
///
///   [line49nodes]
///   generator = path:49
///   vertices = 49
///   edges = 48
///   published.bonato = 12
///
///   [ca-netscience]
///   file = data/ca-netscience.mtx
///   format = mtx
///   optional = true
///
/// Global keys must precede the first section. Throws ParseError.
BenchManifest parse_manifest(std::istream& in, const std::string& base_dir = "");
BenchManifest load_manifest(const std::string& path);

struct AlgorithmStats {
  std::string algorithm;
  std::size_t best = 0;
  std::size_t worst = 0;
  double mean = 0.0;
  std::size_t runs = 0;
  double wall_time_ms = 0.0;
  std::string note;

  friend bool operator==(const AlgorithmStats&, const AlgorithmStats&) = default;
};

struct InstanceReport {
  std::string name;
  // ok | flagged (size mismatch) | skipped (optional file absent) | error
  std::string status = "ok";
  std::string message;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  // False if any produced sequence failed verification; such sequences are not counted.
  bool verified = true;
  PublishedLengths published;
  std::vector<AlgorithmStats> results;

  friend bool operator==(const InstanceReport&, const InstanceReport&) = default;
};

struct BenchReport {
  std::string version;
  std::uint64_t seed = 0;
  std::size_t runs_per_instance = 0;
  std::string tiebreak = "lowest";
  std::vector<std::string> algorithms;
  std::vector<InstanceReport> instances;
  bool failed = false;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Runs every algorithm on every instance. Each bgp/alg1 run starts from a
/// vertex derived from (seed, instance name, run index); bgp_plus already
/// covers all starts and runs once. The report depends only on the manifest,
/// apart from wall times.
BenchReport run_benchmark(const BenchManifest& manifest, std::size_t threads = 0);

enum class ReportFormat { table, json, csv };
ReportFormat parse_report_format(const std::string& name);

std::string emit_report(const BenchReport& report, ReportFormat format);
BenchReport report_from_json(const std::string& text);
BenchReport report_from_csv(const std::string& text);

// Zeroes every wall-time field, for comparisons that must ignore timing.
void strip_timing(BenchReport& report);

const char* library_version();

}  // namespace graphburn
