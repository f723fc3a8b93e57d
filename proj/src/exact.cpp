#include "graphburn/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "graphburn/error.hpp"

namespace graphburn {
namespace {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(std::size_t n) {
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v) s.insert(static_cast<Vertex>(v));
    return s;
  }

  void insert(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  bool contains(Vertex v) const { return (words_[v / 64] >> (v % 64)) & 1U; }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        fn(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class CoverSearch {
 public:
  CoverSearch(const DistanceMatrix& dm, std::size_t k, std::uint64_t budget, std::uint64_t& nodes)
      : dm_(dm), n_(dm.size()), k_(k), budget_(budget), nodes_(nodes), balls_(k), seq_(k, 0) {
    for (std::size_t r = 0; r < k; ++r) {
      balls_[r].reserve(n_);
      for (Vertex v = 0; v < n_; ++v) {
        VertexSet ball(n_);
        auto row = dm.row(v);
        for (Vertex u = 0; u < n_; ++u) {
          if (row[u] <= r) ball.insert(u);
        }
        balls_[r].push_back(std::move(ball));
      }
    }
  }

  std::optional<BurningSequence> run() {
    if (search(0, VertexSet::full(n_))) return seq_;
    return std::nullopt;
  }

 private:
  struct Candidate {
    Vertex vertex;
    VertexSet gain;
    std::size_t size;
  };

  bool search(std::size_t pos, const VertexSet& uncovered) {
    if (uncovered.empty()) {
      // Remaining positions cover nothing new; repeating the previous source is harmless.
      for (std::size_t i = pos; i < k_; ++i) seq_[i] = pos == 0 ? 0 : seq_[pos - 1];
      return true;
    }
    if (pos == k_) return false;
    if (++nodes_ > budget_) throw BudgetExceeded("exact search exceeded its node budget");

    const std::size_t radius = k_ - 1 - pos;
    if (far_apart_count(uncovered, 2 * radius, k_ - pos) > k_ - pos) return false;

    for (const auto& c : candidates(radius, uncovered)) {
      seq_[pos] = c.vertex;
      if (search(pos + 1, uncovered.minus(c.gain))) return true;
    }
    return false;
  }

  // Greedy packing of uncovered vertices that pairwise sit more than `spread`
  // apart; no ball of radius <= spread/2 holds two of them. Stops early once
  // the count exceeds `limit`.
  std::size_t far_apart_count(const VertexSet& uncovered, std::size_t spread, std::size_t limit) const {
    std::vector<Vertex> picked;
    uncovered.for_each([&](Vertex u) {
      if (picked.size() > limit) return;
      auto row = dm_.row(u);
      for (Vertex p : picked) {
        if (row[p] <= spread) return;
      }
      picked.push_back(u);
    });
    return picked.size();
  }

  std::vector<Candidate> candidates(std::size_t radius, const VertexSet& uncovered) const {
    std::vector<Candidate> all;
    for (Vertex v = 0; v < n_; ++v) {
      VertexSet gain = balls_[radius][v] & uncovered;
      const auto size = gain.count();
      if (size > 0) all.push_back({v, std::move(gain), size});
    }
    std::stable_sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return a.size > b.size; });
    // Drop candidates whose gain is contained in an earlier (no smaller) one.
    std::vector<Candidate> kept;
    for (auto& c : all) {
      const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Candidate& o) {
        return c.gain.subset_of(o.gain);
      });
      if (!dominated) kept.push_back(std::move(c));
    }
    return kept;
  }

  const DistanceMatrix& dm_;
  std::size_t n_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<std::vector<VertexSet>> balls_;  // balls_[r][v] = N_r[v]
  BurningSequence seq_;
};

void check_size(const Graph& g, const ExactLimits& limits) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("burning number of the empty graph is undefined");
  if (n > limits.max_n) {
    throw BudgetExceeded("graph has " + std::to_string(n) + " vertices, exact search is limited to " +
                         std::to_string(limits.max_n));
  }
}

}  // namespace

std::optional<BurningSequence> is_feasible(const Graph& g, const DistanceMatrix& dm, std::size_t k,
                                           std::uint64_t node_budget, std::uint64_t* nodes) {
  if (dm.size() != g.num_vertices()) throw std::invalid_argument("distance matrix does not match the graph");
  if (k < 1) throw std::invalid_argument("is_feasible needs k >= 1");
  if (g.num_vertices() == 0) return BurningSequence{};
  std::uint64_t local = 0;
  std::uint64_t& counter = nodes != nullptr ? *nodes : local;
  // No point in radii beyond n - 1; the extra positions only repeat.
  const std::size_t effective_k = std::min<std::size_t>(k, std::max<std::size_t>(g.num_vertices(), 1));
  auto found = CoverSearch(dm, effective_k, node_budget, counter).run();
  if (found && effective_k < k) {
    // Prepend copies of the first source: the existing positions keep their radii.
    BurningSequence padded(k - effective_k, found->front());
    padded.insert(padded.end(), found->begin(), found->end());
    return padded;
  }
  return found;
}

ExactResult burning_number_exact(const Graph& g, const DistanceMatrix& dm, const ExactLimits& limits) {
  check_size(g, limits);
  if (dm.size() != g.num_vertices()) throw std::invalid_argument("distance matrix does not match the graph");
  const std::size_t n = g.num_vertices();
  const std::size_t max_k = limits.max_k == 0 ? n : std::min(limits.max_k, n);

  ExactResult result;
  result.lower_bound = eccentricity_lower_bound(dm);
  for (std::size_t k = result.lower_bound; k <= max_k; ++k) {
    if (auto witness = is_feasible(g, dm, k, limits.node_budget, &result.nodes_explored)) {
      result.burning_number = k;
      result.witness = std::move(*witness);
      return result;
    }
  }
  throw BudgetExceeded("no burning sequence of length <= " + std::to_string(max_k));
}

ExactResult burning_number_exact(const Graph& g, const ExactLimits& limits) {
  check_size(g, limits);
  return burning_number_exact(g, apsp(g), limits);
}

}  // namespace graphburn
