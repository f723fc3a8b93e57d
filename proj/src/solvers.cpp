#include "graphburn/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphburn/parallel.hpp"

namespace graphburn {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_vertex(Vertex v, std::size_t n, const char* what) {
  if (v >= n) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) + " out of range for " +
                                std::to_string(n) + " vertices");
  }
}

// Running min-distance from every vertex to the selected set, so each
// farthest-first step costs O(n).
class FarthestFirst {
 public:
  explicit FarthestFirst(const DistanceMatrix& dm)
      : dm_(dm), nearest_(dm.size(), Distance::kUnreachable) {}

  void add(Vertex v) {
    auto row = dm_.row(v);
    for (std::size_t u = 0; u < nearest_.size(); ++u) nearest_[u] = std::min(nearest_[u], row[u]);
  }

  Vertex next(const TieBreakPolicy& tb) {
    const auto best = *std::max_element(nearest_.begin(), nearest_.end());
    candidates_.clear();
    for (std::size_t u = 0; u < nearest_.size(); ++u) {
      if (nearest_[u] == best) candidates_.push_back(static_cast<Vertex>(u));
    }
    return tb.choose(candidates_);
  }

  std::vector<Distance> snapshot() const {
    std::vector<Distance> out;
    out.reserve(nearest_.size());
    for (auto d : nearest_) out.emplace_back(d);
    return out;
  }

 private:
  const DistanceMatrix& dm_;
  std::vector<Distance::rep> nearest_;
  std::vector<Vertex> candidates_;
};

}  // namespace

TieBreakPolicy TieBreakPolicy::preference_list(std::vector<Vertex> order) {
  TieBreakPolicy p;
  p.rule_ = Preference{std::move(order)};
  return p;
}

TieBreakPolicy TieBreakPolicy::seeded_random(std::uint64_t seed) {
  TieBreakPolicy p;
  p.rule_ = SeededRandom{seed};
  return p;
}

Vertex TieBreakPolicy::choose(std::span<const Vertex> candidates) const {
  if (candidates.empty()) throw std::invalid_argument("tie-break over an empty candidate set");
  if (const auto* pref = std::get_if<Preference>(&rule_)) {
    for (Vertex v : pref->order) {
      if (std::binary_search(candidates.begin(), candidates.end(), v)) return v;
    }
    return candidates.front();
  }
  if (const auto* rnd = std::get_if<SeededRandom>(&rule_)) {
    std::uint64_t h = splitmix64(rnd->seed);
    for (Vertex v : candidates) h = splitmix64(h ^ v);
    return candidates[h % candidates.size()];
  }
  return candidates.front();
}

void TieBreakPolicy::validate(std::size_t n) const {
  const auto* pref = std::get_if<Preference>(&rule_);
  if (pref == nullptr) return;
  std::vector<bool> seen(n, false);
  for (Vertex v : pref->order) {
    check_vertex(v, n, "preference vertex");
    if (seen[v]) throw std::invalid_argument("preference list repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
}

std::string TieBreakPolicy::describe() const {
  if (const auto* pref = std::get_if<Preference>(&rule_)) {
    std::string out = "pref:";
    for (std::size_t i = 0; i < pref->order.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(pref->order[i]);
    }
    return out;
  }
  if (const auto* rnd = std::get_if<SeededRandom>(&rule_)) return "random:" + std::to_string(rnd->seed);
  return "lowest";
}

Vertex farthest_first_step(const DistanceMatrix& dm, std::span<const Vertex> selected,
                           const TieBreakPolicy& tb) {
  if (selected.empty()) throw std::invalid_argument("farthest_first_step needs a non-empty selection");
  FarthestFirst ff(dm);
  for (Vertex s : selected) {
    check_vertex(s, dm.size(), "selected vertex");
    ff.add(s);
  }
  return ff.next(tb);
}

BurningSequence alg1_known_b(const Graph& g, const DistanceMatrix& dm, std::size_t k, Vertex first,
                             const TieBreakPolicy& tb) {
  if (k < 1) throw std::invalid_argument("alg1_known_b needs k >= 1");
  check_vertex(first, g.num_vertices(), "start vertex");
  tb.validate(g.num_vertices());

  BurningSequence seq;
  seq.reserve(3 * k - 2);
  FarthestFirst ff(dm);
  seq.push_back(first);
  ff.add(first);
  while (seq.size() < k) {
    const Vertex v = ff.next(tb);
    seq.push_back(v);
    ff.add(v);
  }
  // The 2k-2 filler positions only stretch the radii of the prefix; any
  // vertex works, and repeating the start keeps the result deterministic.
  seq.resize(3 * k - 2, first);
  return seq;
}

SolveResult bgp(const Graph& g, const DistanceMatrix& dm, Vertex first, const TieBreakPolicy& tb,
                std::vector<BgpTraceRow>* trace) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("bgp needs a non-empty graph");
  if (dm.size() != n) throw std::invalid_argument("distance matrix does not match the graph");
  check_vertex(first, n, "start vertex");
  tb.validate(n);

  FarthestFirst ff(dm);
  BurnState fire(n);
  SolveResult result;
  result.start_vertex = first;

  auto record = [&] {
    if (trace == nullptr) return;
    trace->push_back({result.sequence.size(), ff.snapshot(), fire.burned_curr()});
  };
  if (trace != nullptr) trace->clear();
  record();

  auto select = [&](Vertex v) {
    result.sequence.push_back(v);
    ff.add(v);
    fire.advance(g, v);
    record();
  };

  select(first);
  while (!fire.all_burned()) {
    select(ff.next(tb));
    ++result.iterations;
  }
  result.valid = verify(result.sequence, g, dm);
  return result;
}

SolveResult bgp_plus(const Graph& g, const DistanceMatrix& dm, const TieBreakPolicy& tb,
                     std::size_t threads) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("bgp_plus needs a non-empty graph");
  tb.validate(n);

  std::vector<SolveResult> runs(n);
  parallel_for(n, threads, [&](std::size_t start) {
    runs[start] = bgp(g, dm, static_cast<Vertex>(start), tb);
  });
  // Strict < keeps the lowest start id among equal lengths.
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    if (runs[s].sequence.size() < runs[best].sequence.size()) best = s;
  }
  return std::move(runs[best]);
}

}  // namespace graphburn
