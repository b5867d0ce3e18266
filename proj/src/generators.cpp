#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "stabset/errors.hpp"
#include "stabset/graph.hpp"

namespace stabset {
namespace {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

Graph gen_paley(std::uint32_t q) {
  if (!is_prime(q) || q % 4 != 1)
    throw ArgumentError("paley: q=" + std::to_string(q) + " must be a prime with q = 1 mod 4");
  std::vector<bool> residue(q, false);
  for (std::uint64_t a = 1; a < q; ++a) residue[(a * a) % q] = true;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < q; ++i)
    for (Vertex j = i + 1; j < q; ++j)
      if (residue[j - i]) edges.push_back({i, j});
  return Graph(q, std::move(edges));
}

Graph gen_torus(std::span<const std::uint32_t> dims) {
  if (dims.empty()) throw ArgumentError("torus: at least one dimension required");
  std::size_t n = 1;
  for (auto d : dims) {
    if (d < 3) throw ArgumentError("torus: every cycle length must be >= 3");
    n *= d;
  }
  std::vector<Edge> edges;
  edges.reserve(n * dims.size());
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t stride = 1;
    for (auto d : dims) {
      std::size_t coord = (v / stride) % d;
      std::size_t w = v - coord * stride + ((coord + 1) % d) * stride;
      edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(w)});
      stride *= d;
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("random graph: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("random graph: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      // 53-bit uniform in [0,1); spelled out so the graph does not depend on the
      // standard library's distribution implementation.
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({i, j});
    }
  return Graph(n, std::move(edges));
}

Graph gen_hamming_complement(std::uint32_t bits, std::uint32_t distance) {
  if (bits < 1 || bits > 20) throw ArgumentError("hamming: word length must lie in [1,20]");
  const std::uint32_t n = 1U << bits;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (static_cast<std::uint32_t>(std::popcount(a ^ b)) < distance) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph gen_johnson_complement(std::uint32_t length, std::uint32_t weight, std::uint32_t distance) {
  if (length < 1 || length > 24 || weight > length)
    throw ArgumentError("johnson: need 1 <= length <= 24 and weight <= length");
  std::vector<std::uint32_t> words;
  for (std::uint32_t w = 0; w < (1U << length); ++w)
    if (static_cast<std::uint32_t>(std::popcount(w)) == weight) words.push_back(w);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < words.size(); ++a)
    for (Vertex b = a + 1; b < words.size(); ++b)
      if (static_cast<std::uint32_t>(std::popcount(words[a] ^ words[b])) < distance)
        edges.push_back({a, b});
  return Graph(words.size(), std::move(edges));
}

Graph gen_mann_a9_complement() {
  // Points of AG(2,3) are (x,y) -> 3x+y. Lines: y = s*x + c for s,c in Z_3, and x = c.
  std::vector<std::array<Vertex, 3>> lines;
  for (Vertex s = 0; s < 3; ++s)
    for (Vertex c = 0; c < 3; ++c) {
      std::array<Vertex, 3> line{};
      for (Vertex x = 0; x < 3; ++x) line[x] = 3 * x + (s * x + c) % 3;
      lines.push_back(line);
    }
  for (Vertex c = 0; c < 3; ++c) lines.push_back({3 * c, 3 * c + 1, 3 * c + 2});

  const Vertex incidences = static_cast<Vertex>(3 * lines.size());
  std::vector<Edge> edges;
  for (Vertex k = 0; k < lines.size(); ++k) {
    Vertex base = 3 * k;
    edges.push_back({base, base + 1});
    edges.push_back({base, base + 2});
    edges.push_back({base + 1, base + 2});
    for (Vertex t = 0; t < 3; ++t) edges.push_back({base + t, incidences + lines[k][t]});
  }
  return Graph(incidences + 9, std::move(edges));
}

}  // namespace stabset
