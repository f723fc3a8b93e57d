#include "graphburn/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace graphburn {
namespace {

void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

// Uniform draw in [0, bound) from the raw engine output. Kept independent of
// std::uniform_int_distribution so the sequence is identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, const std::string& spec) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("bad number '" + std::string(tok) + "' in generator spec '" + spec + "'");
  }
  return v;
}

}  // namespace

Graph gen_path(std::size_t n) {
  require_positive(n, "path length");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edges(n, edges);
}

Graph gen_grid2d(std::size_t w, std::size_t h) {
  require_positive(w, "grid width");
  require_positive(h, "grid height");
  std::vector<Edge> edges;
  auto id = [w](std::size_t x, std::size_t y) { return static_cast<Vertex>(y * w + x); };
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (x + 1 < w) edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < h) edges.emplace_back(id(x, y), id(x, y + 1));
    }
  }
  return Graph::from_edges(w * h, edges);
}

Graph gen_grid3d(std::size_t x, std::size_t y, std::size_t z) {
  require_positive(x, "grid x");
  require_positive(y, "grid y");
  require_positive(z, "grid z");
  std::vector<Edge> edges;
  auto id = [x, y](std::size_t i, std::size_t j, std::size_t k) {
    return static_cast<Vertex>((k * y + j) * x + i);
  };
  for (std::size_t k = 0; k < z; ++k) {
    for (std::size_t j = 0; j < y; ++j) {
      for (std::size_t i = 0; i < x; ++i) {
        if (i + 1 < x) edges.emplace_back(id(i, j, k), id(i + 1, j, k));
        if (j + 1 < y) edges.emplace_back(id(i, j, k), id(i, j + 1, k));
        if (k + 1 < z) edges.emplace_back(id(i, j, k), id(i, j, k + 1));
      }
    }
  }
  return Graph::from_edges(x * y * z, edges);
}

Graph gen_preferential_attachment(std::size_t n, std::size_t m, std::uint64_t seed) {
  require_positive(n, "vertex count");
  require_positive(m, "attachment count");
  if (m >= n) throw std::invalid_argument("preferential attachment needs m < n");

  std::mt19937_64 rng(seed);
  // Each vertex appears once for the +1 smoothing and once more per incident edge,
  // so a uniform draw from this pool is degree-proportional.
  std::vector<Vertex> pool;
  pool.reserve(n + 2 * (n - m) * m);
  for (std::size_t v = 0; v < m; ++v) pool.push_back(static_cast<Vertex>(v));

  std::vector<Edge> edges;
  edges.reserve((n - m) * m);
  std::vector<Vertex> targets;
  for (std::size_t v = m; v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      Vertex t = pool[draw(rng, pool.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (Vertex t : targets) {
      edges.emplace_back(t, static_cast<Vertex>(v));
      pool.push_back(t);
      pool.push_back(static_cast<Vertex>(v));
    }
    pool.push_back(static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

Graph fixture_tight_example() {
  enum : Vertex { A, B, C, D, E, F, G, H, I, J, K, L, M, N };
  const std::vector<Edge> edges = {
      {A, B}, {B, C}, {C, D}, {D, E},  // spine
      {C, F}, {F, G},                  // branch to G
      {C, H}, {H, I}, {H, J},          // fork at H
      {K, L}, {L, M},                  // second component
  };
  std::vector<std::string> labels;
  for (char c = 'A'; c <= 'N'; ++c) labels.emplace_back(1, c);
  return Graph::from_edges(14, edges).with_labels(std::move(labels));
}

Graph generate_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string_view params =
      colon == std::string::npos ? std::string_view{} : std::string_view(spec).substr(colon + 1);

  if (name == "tight-example") return fixture_tight_example();
  if (name == "path") return gen_path(to_uint(params, spec));
  if (name == "grid2") {
    auto dims = split(params, 'x');
    if (dims.size() != 2) throw std::invalid_argument("grid2 expects WxH, got '" + spec + "'");
    return gen_grid2d(to_uint(dims[0], spec), to_uint(dims[1], spec));
  }
  if (name == "grid3") {
    auto dims = split(params, 'x');
    if (dims.size() != 3) throw std::invalid_argument("grid3 expects XxYxZ, got '" + spec + "'");
    return gen_grid3d(to_uint(dims[0], spec), to_uint(dims[1], spec), to_uint(dims[2], spec));
  }
  if (name == "ba") {
    auto args = split(params, ',');
    if (args.size() != 2 && args.size() != 3) {
      throw std::invalid_argument("ba expects n,m[,seed], got '" + spec + "'");
    }
    const std::uint64_t seed = args.size() == 3 ? to_uint(args[2], spec) : 0;
    return gen_preferential_attachment(to_uint(args[0], spec), to_uint(args[1], spec), seed);
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace graphburn
