#include "admlab/random_graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace admlab {

std::uint64_t task_seed(std::uint64_t sweep_seed, std::uint64_t index) {
  std::uint64_t z = sweep_seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Integer in [lo, hi] from the raw engine output, independent of the standard library's
// distribution implementation so that sweeps reproduce across toolchains.
long uniform(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational random_length(std::mt19937_64& rng, const RandomGraphParams& p) {
  return Rational(uniform(rng, 1, p.max_numerator), uniform(rng, 1, p.max_denominator));
}

std::vector<std::pair<std::size_t, std::size_t>> pruefer_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  for (auto c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::size_t a = n, b = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) (a == n ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return edges;
}

}  // namespace

MetrizedGraph random_graph(std::uint64_t seed, const RandomGraphParams& p) {
  if (p.max_vertices < 1 || p.min_genus < 1 || p.max_genus < p.min_genus || p.max_numerator < 1 ||
      p.max_denominator < 1) {
    throw std::invalid_argument("invalid random graph parameters");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, p.max_vertices));
    const long target = uniform(rng, p.min_genus, p.max_genus);
    const long tree_edges = static_cast<long>(n) - 1;
    if (tree_edges > p.max_edges) continue;
    const long extra = uniform(rng, 0, std::min<long>(p.max_edges - tree_edges, target));

    std::vector<Vertex> vertices(n);
    for (std::size_t v = 0; v < n; ++v) vertices[v] = {"v" + std::to_string(v), 0};
    for (long k = 0; k < target - extra; ++k) ++vertices[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))].genus;

    std::vector<Edge> edges;
    for (auto [a, b] : pruefer_tree(rng, n)) {
      edges.push_back({"e" + std::to_string(edges.size()), a, b, random_length(rng, p)});
    }
    for (long k = 0; k < extra; ++k) {
      const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      edges.push_back({"e" + std::to_string(edges.size()), a, b, random_length(rng, p)});
    }
    MetrizedGraph g(std::move(vertices), std::move(edges));
    const Divisor k = canonical_divisor(g);
    if (std::any_of(k.coefficients.begin(), k.coefficients.end(), [](long c) { return c < 0; })) continue;
    return g;
  }
  throw std::runtime_error("random graph parameters admit no stable graph");
}

}  // namespace admlab
