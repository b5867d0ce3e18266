#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabset/vertex_set.hpp"

namespace stabset {

using Vertex = std::uint32_t;

/// Unordered vertex pair, normalised so that u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Binary assignment over the vertices (1 = vertex selected).
using BinaryVector = std::vector<std::uint8_t>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Holds the sorted edge list together with neighbor lists and bitset rows
/// of the adjacency matrix; all three describe the same symmetric relation.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Endpoints must lie in [0, n); self-loops
  /// and repeated pairs (in either orientation) throw ValidationError.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }

  /// Edges sorted lexicographically, each with u < v.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_list_[v]; }
  const VertexSet& neighbor_set(Vertex v) const noexcept { return adj_rows_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adj_list_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_rows_[u].test(v); }

  /// Graph on the same vertices whose edges are exactly the non-edges of this one.
  Graph complement() const;

  /// Induced subgraph with vertex `v` removed; remaining vertices are renumbered in order.
  Graph without_vertex(Vertex v) const;

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_list_;
  std::vector<VertexSet> adj_rows_;
};

/// Reads DIMACS edge format (`c` comments, one `p edge n m` line, `e i j` lines with
/// 1-based endpoints). With `complement` set, the returned graph is the complement of
/// the edges listed in the file (for benchmark files distributed in clique form).
Graph parse_dimacs(std::istream& in, bool complement = false);
Graph parse_dimacs_string(const std::string& text, bool complement = false);
Graph load_dimacs_file(const std::string& path, bool complement = false);

/// Writes DIMACS edge format with 1-based endpoints.
void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = {});

/// Paley graph on Z_q: i ~ j iff i - j is a nonzero quadratic residue. Requires q prime, q = 1 mod 4.
Graph gen_paley(std::uint32_t q);

/// Cartesian product of cycles C_{d0} x C_{d1} x ...; the first coordinate varies fastest
/// in the vertex numbering. Every length must be at least 3.
Graph gen_torus(std::span<const std::uint32_t> dims);

/// Erdos-Renyi G(n, p), deterministic for fixed (n, p, seed).
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

/// Complement of the DIMACS hamming<bits>-<d> clique graph: words adjacent iff their
/// Hamming distance is below d.
Graph gen_hamming_complement(std::uint32_t bits, std::uint32_t distance);

/// Complement of the DIMACS johnson<len>-<weight>-<d> clique graph over weight-w binary
/// words of length len: words adjacent iff their Hamming distance is below d.
Graph gen_johnson_complement(std::uint32_t length, std::uint32_t weight, std::uint32_t distance);

/// Complement of MANN_a9: the clique formulation of the Steiner triple covering problem
/// on the affine plane AG(2,3). One triangle per block (one vertex per block/point
/// incidence) plus one vertex per point joined to that point's incidence vertices.
Graph gen_mann_a9_complement();

}  // namespace stabset
