#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "graphburn/bench.hpp"
#include "graphburn/error.hpp"

namespace graphburn {
namespace {

using nlohmann::ordered_json;

constexpr const char* kPublishedKeys[] = {"bonato", "gaflss", "bgp", "bgp_plus"};

std::optional<std::size_t> PublishedLengths::*published_member(std::string_view key) {
  if (key == "bonato") return &PublishedLengths::bonato;
  if (key == "gaflss") return &PublishedLengths::gaflss;
  if (key == "bgp") return &PublishedLengths::bgp;
  if (key == "bgp_plus") return &PublishedLengths::bgp_plus;
  throw ParseError(0, "unknown published column '" + std::string(key) + "'");
}

template <typename P>
auto& published_slot(P& p, std::string_view key) {
  return p.*published_member(key);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// --- json ---------------------------------------------------------------

ordered_json to_json(const BenchReport& r) {
  ordered_json env;
  env["version"] = r.version;
  env["seed"] = r.seed;
  env["runs_per_instance"] = r.runs_per_instance;
  env["tiebreak"] = r.tiebreak;
  env["algorithms"] = r.algorithms;

  ordered_json instances = ordered_json::array();
  for (const auto& inst : r.instances) {
    ordered_json j;
    j["name"] = inst.name;
    j["status"] = inst.status;
    j["message"] = inst.message;
    j["vertices"] = inst.vertices;
    j["edges"] = inst.edges;
    j["verified"] = inst.verified;
    ordered_json pub = ordered_json::object();
    for (const char* key : kPublishedKeys) {
      if (const auto& v = published_slot(inst.published, key)) pub[key] = *v;
    }
    j["published"] = pub;
    ordered_json results = ordered_json::array();
    for (const auto& s : inst.results) {
      results.push_back({{"algorithm", s.algorithm},
                         {"best", s.best},
                         {"worst", s.worst},
                         {"mean", s.mean},
                         {"runs", s.runs},
                         {"wall_time_ms", s.wall_time_ms},
                         {"note", s.note}});
    }
    j["results"] = results;
    instances.push_back(std::move(j));
  }
  ordered_json out;
  out["environment"] = env;
  out["failed"] = r.failed;
  out["instances"] = instances;
  return out;
}

// --- csv ----------------------------------------------------------------

const std::vector<std::string> kCsvHeader = {
    "instance", "status",  "message",   "vertices",   "edges", "verified", "pub_bonato", "pub_gaflss",
    "pub_bgp",  "pub_bgp_plus", "algorithm", "best", "worst", "mean",     "runs",       "wall_time_ms",
    "note"};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::vector<std::string>> parse_csv_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t csv_size(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(0, "bad integer '" + s + "' in csv report");
  return v;
}

double csv_double(const std::string& s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(0, "bad number '" + s + "' in csv report");
  return v;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string emit_csv(const BenchReport& r) {
  std::ostringstream out;
  out << "# version=" << r.version << '\n';
  out << "# seed=" << r.seed << '\n';
  out << "# runs_per_instance=" << r.runs_per_instance << '\n';
  out << "# tiebreak=" << r.tiebreak << '\n';
  out << "# algorithms=" << join(r.algorithms, ';') << '\n';
  out << "# failed=" << (r.failed ? "true" : "false") << '\n';
  out << join(kCsvHeader, ',') << '\n';
  for (const auto& inst : r.instances) {
    std::vector<std::string> base = {csv_field(inst.name), inst.status, csv_field(inst.message),
                                     std::to_string(inst.vertices), std::to_string(inst.edges),
                                     inst.verified ? "true" : "false"};
    for (const char* key : kPublishedKeys) {
      const auto& v = published_slot(inst.published, key);
      base.push_back(v ? std::to_string(*v) : "");
    }
    if (inst.results.empty()) {
      base.resize(kCsvHeader.size());
      out << join(base, ',') << '\n';
      continue;
    }
    for (const auto& s : inst.results) {
      auto row = base;
      row.insert(row.end(), {s.algorithm, std::to_string(s.best), std::to_string(s.worst), format_double(s.mean),
                             std::to_string(s.runs), format_double(s.wall_time_ms), csv_field(s.note)});
      out << join(row, ',') << '\n';
    }
  }
  return out.str();
}

// --- table --------------------------------------------------------------

std::string algorithm_title(const std::string& a) {
  if (a == "bgp") return "BGP";
  if (a == "bgp_plus") return "BGP+";
  if (a == "alg1") return "Alg1";
  return a;
}

std::string emit_table(const BenchReport& r) {
  struct Column {
    std::string title;
    std::vector<std::string> cells;
  };
  std::vector<Column> cols = {{"G=(V,E)", {}}, {"|V|", {}}, {"|E|", {}}};
  const std::pair<const char*, const char*> published_titles[] = {
      {"bonato", "Bonato"}, {"gaflss", "GAFLSS"}, {"bgp", "BGP (ref)"}, {"bgp_plus", "BGP+ (ref)"}};
  std::vector<const char*> pub_keys;
  for (const auto& [key, title] : published_titles) {
    const bool present = std::any_of(r.instances.begin(), r.instances.end(),
                                     [&](const InstanceReport& i) { return published_slot(i.published, key).has_value(); });
    if (present) {
      pub_keys.push_back(key);
      cols.push_back({title, {}});
    }
  }
  for (const auto& a : r.algorithms) cols.push_back({algorithm_title(a), {}});
  cols.push_back({"status", {}});

  for (const auto& inst : r.instances) {
    std::size_t c = 0;
    const bool has_graph = inst.status == "ok" || inst.status == "flagged";
    cols[c++].cells.push_back(inst.name);
    cols[c++].cells.push_back(has_graph ? std::to_string(inst.vertices) : "-");
    cols[c++].cells.push_back(has_graph ? std::to_string(inst.edges) : "-");
    for (const char* key : pub_keys) {
      const auto& v = published_slot(inst.published, key);
      cols[c++].cells.push_back(v ? std::to_string(*v) : "-");
    }
    for (const auto& a : r.algorithms) {
      auto it = std::find_if(inst.results.begin(), inst.results.end(),
                             [&](const AlgorithmStats& s) { return s.algorithm == a; });
      cols[c++].cells.push_back(it != inst.results.end() && it->runs > 0 ? std::to_string(it->best) : "-");
    }
    std::string status = inst.status;
    if (!inst.verified) status += ", UNVERIFIED";
    if (!inst.message.empty()) status += " (" + inst.message + ")";
    cols[c++].cells.push_back(status);
  }

  std::ostringstream out;
  auto emit_row = [&](auto&& cell_of) {
    std::string line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::size_t width = cols[c].title.size();
      for (const auto& s : cols[c].cells) width = std::max(width, s.size());
      const std::string cell = cell_of(c);
      if (c) line += "  ";
      line += c + 1 == cols.size() ? cell : cell + std::string(width - cell.size(), ' ');
    }
    out << line << '\n';
  };
  emit_row([&](std::size_t c) { return cols[c].title; });
  std::size_t total = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t width = cols[c].title.size();
    for (const auto& s : cols[c].cells) width = std::max(width, s.size());
    total += width + (c ? 2 : 0);
  }
  out << std::string(total, '-') << '\n';
  for (std::size_t row = 0; row < r.instances.size(); ++row) {
    emit_row([&](std::size_t c) { return cols[c].cells[row]; });
  }
  return out.str();
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "table") return ReportFormat::table;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + name + "' (expected table, json or csv)");
}

std::string emit_report(const BenchReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return to_json(report).dump(2) + "\n";
    case ReportFormat::csv: return emit_csv(report);
    case ReportFormat::table: return emit_table(report);
  }
  return {};
}

BenchReport report_from_json(const std::string& text) {
  BenchReport r;
  try {
    const auto j = ordered_json::parse(text);
    const auto& env = j.at("environment");
    r.version = env.at("version").get<std::string>();
    r.seed = env.at("seed").get<std::uint64_t>();
    r.runs_per_instance = env.at("runs_per_instance").get<std::size_t>();
    r.tiebreak = env.at("tiebreak").get<std::string>();
    r.algorithms = env.at("algorithms").get<std::vector<std::string>>();
    r.failed = j.at("failed").get<bool>();
    for (const auto& ji : j.at("instances")) {
      InstanceReport inst;
      inst.name = ji.at("name").get<std::string>();
      inst.status = ji.at("status").get<std::string>();
      inst.message = ji.at("message").get<std::string>();
      inst.vertices = ji.at("vertices").get<std::size_t>();
      inst.edges = ji.at("edges").get<std::size_t>();
      inst.verified = ji.at("verified").get<bool>();
      for (const auto& [key, value] : ji.at("published").items()) {
        published_slot(inst.published, key) = value.get<std::size_t>();
      }
      for (const auto& js : ji.at("results")) {
        AlgorithmStats s;
        s.algorithm = js.at("algorithm").get<std::string>();
        s.best = js.at("best").get<std::size_t>();
        s.worst = js.at("worst").get<std::size_t>();
        s.mean = js.at("mean").get<double>();
        s.runs = js.at("runs").get<std::size_t>();
        s.wall_time_ms = js.at("wall_time_ms").get<double>();
        s.note = js.at("note").get<std::string>();
        inst.results.push_back(std::move(s));
      }
      r.instances.push_back(std::move(inst));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad json report: ") + e.what());
  }
  return r;
}

BenchReport report_from_csv(const std::string& text) {
  BenchReport r;
  std::istringstream in(text);
  std::string data;
  std::string line;
  // Environment lives in leading comment lines.
  while (in.peek() == '#' && std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const auto key = line.substr(2, eq - 2);
    const auto value = line.substr(eq + 1);
    if (key == "version") r.version = value;
    else if (key == "seed") r.seed = std::stoull(value);
    else if (key == "runs_per_instance") r.runs_per_instance = csv_size(value);
    else if (key == "tiebreak") r.tiebreak = value;
    else if (key == "failed") r.failed = value == "true";
    else if (key == "algorithms") {
      std::size_t start = 0;
      while (!value.empty() && start <= value.size()) {
        auto semi = value.find(';', start);
        if (semi == std::string::npos) semi = value.size();
        r.algorithms.push_back(value.substr(start, semi - start));
        start = semi + 1;
      }
    }
  }
  auto rows = parse_csv_rows(in);
  if (rows.empty() || rows.front() != kCsvHeader) throw ParseError(0, "csv report header mismatch");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != kCsvHeader.size()) throw ParseError(i + 1, "csv report row has wrong arity");
    if (r.instances.empty() || r.instances.back().name != row[0]) {
      InstanceReport inst;
      inst.name = row[0];
      inst.status = row[1];
      inst.message = row[2];
      inst.vertices = csv_size(row[3]);
      inst.edges = csv_size(row[4]);
      inst.verified = row[5] == "true";
      for (std::size_t k = 0; k < 4; ++k) {
        if (!row[6 + k].empty()) published_slot(inst.published, kPublishedKeys[k]) = csv_size(row[6 + k]);
      }
      r.instances.push_back(std::move(inst));
    }
    if (row[10].empty()) continue;
    AlgorithmStats s;
    s.algorithm = row[10];
    s.best = csv_size(row[11]);
    s.worst = csv_size(row[12]);
    s.mean = csv_double(row[13]);
    s.runs = csv_size(row[14]);
    s.wall_time_ms = csv_double(row[15]);
    s.note = row[16];
    r.instances.back().results.push_back(std::move(s));
  }
  return r;
}

}  // namespace graphburn
