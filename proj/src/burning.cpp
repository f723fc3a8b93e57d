#include "graphburn/burning.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "graphburn/error.hpp"

namespace graphburn {
namespace {

void check_ids(std::span<const Vertex> seq, std::size_t n) {
  for (Vertex v : seq) {
    if (v >= n) {
      throw std::invalid_argument("sequence vertex " + std::to_string(v) + " out of range for " +
                                  std::to_string(n) + " vertices");
    }
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

void BurnState::advance(const Graph& g, Vertex source) {
  if (source >= burned_at_.size()) {
    throw std::invalid_argument("source " + std::to_string(source) + " out of range");
  }
  const auto next_round = static_cast<std::uint32_t>(round_ + 1);
  std::vector<Vertex> next;
  for (Vertex u : frontier_) {
    for (Vertex w : g.neighbors(u)) {
      if (burned_at_[w] == 0) {
        burned_at_[w] = next_round;
        next.push_back(w);
      }
    }
  }
  if (burned_at_[source] == 0) {
    burned_at_[source] = next_round;
    next.push_back(source);
  }
  burned_count_ += next.size();
  frontier_ = std::move(next);
  round_ = next_round;
}

std::vector<Vertex> BurnState::burned_prev() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < burned_at_.size(); ++v) {
    if (burned_at_[v] != 0 && burned_at_[v] < round_) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> BurnState::burned_curr() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < burned_at_.size(); ++v) {
    if (burned_at_[v] != 0) out.push_back(v);
  }
  return out;
}

Simulation simulate(std::span<const Vertex> seq, const Graph& g, bool record_rounds) {
  check_ids(seq, g.num_vertices());
  Simulation sim{BurnState(g.num_vertices()), false, {}};
  for (Vertex s : seq) {
    sim.state.advance(g, s);
    if (record_rounds) sim.rounds.push_back(sim.state.burned_curr());
  }
  sim.fully_burned = sim.state.all_burned();
  return sim;
}

std::vector<Vertex> covered_set(std::span<const Vertex> seq, const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  check_ids(seq, n);
  const std::size_t k = seq.size();
  // Only the first occurrence of a vertex matters: it carries the largest radius.
  std::vector<std::pair<Vertex, Distance::rep>> balls;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (seen[seq[i]]) continue;
    seen[seq[i]] = true;
    balls.emplace_back(seq[i], static_cast<Distance::rep>(k - 1 - i));
  }
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n; ++u) {
    auto row = dm.row(u);
    for (const auto& [s, radius] : balls) {
      if (row[s] <= radius) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

bool verify(std::span<const Vertex> seq, const Graph& g, const DistanceMatrix& dm) {
  if (dm.size() != g.num_vertices()) {
    throw std::invalid_argument("distance matrix does not match the graph");
  }
  return covered_set(seq, dm).size() == g.num_vertices();
}

std::size_t covering_radius(std::span<const Vertex> seq, Vertex v) {
  auto it = std::find(seq.begin(), seq.end(), v);
  if (it == seq.end()) throw NotInSequence("vertex " + std::to_string(v) + " is not in the sequence");
  // k - min Pos(v) with 1-based positions.
  return seq.size() - static_cast<std::size_t>(it - seq.begin() + 1);
}

std::map<Vertex, std::vector<std::size_t>> position_sets(std::span<const Vertex> seq) {
  std::map<Vertex, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < seq.size(); ++i) out[seq[i]].push_back(i + 1);
  return out;
}

BurningSequence parse_sequence(std::string_view text, const Graph& g) {
  BurningSequence seq;
  text = trim(text);
  if (text.empty()) return seq;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto tok = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (tok.empty()) throw std::invalid_argument("empty entry in sequence '" + std::string(text) + "'");
    if (auto labelled = g.find_label(tok)) {
      seq.push_back(*labelled);
    } else {
      std::uint64_t id = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("unknown vertex '" + std::string(tok) + "'");
      }
      if (id >= g.num_vertices()) {
        throw std::invalid_argument("vertex id " + std::string(tok) + " out of range");
      }
      seq.push_back(static_cast<Vertex>(id));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return seq;
}

std::string format_sequence(std::span<const Vertex> seq, const Graph& g) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += g.name(seq[i]);
  }
  return out;
}

}  // namespace graphburn
