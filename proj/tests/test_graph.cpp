#include <gtest/gtest.h>

#include <array>
#include <set>
#include <sstream>

#include "stabset/errors.hpp"
#include "stabset/graph.hpp"

namespace stabset {
namespace {

std::set<std::pair<Vertex, Vertex>> edge_set(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> s;
  for (const auto& e : g.edges()) s.emplace(e.u, e.v);
  return s;
}

// Scans for self-loops and duplicates, and checks adjacency/edge-list agreement.
void expect_simple(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : g.edges()) {
    EXPECT_LT(e.u, e.v);
    EXPECT_TRUE(seen.emplace(e.u, e.v).second);
  }
  EXPECT_EQ(seen.size(), g.m());
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    degree_sum += g.degree(u);
    EXPECT_EQ(g.neighbor_set(u).count(), g.degree(u));
    for (Vertex v : g.neighbors(u)) {
      EXPECT_TRUE(g.adjacent(v, u));
      EXPECT_TRUE(seen.count({std::min(u, v), std::max(u, v)}));
    }
  }
  EXPECT_EQ(degree_sum, 2 * g.m());
}

TEST(ParseDimacs, MinimalInput) {
  Graph g = parse_dimacs_string("p edge 3 2\ne 1 2\ne 2 3");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ(edge_set(g), (std::set<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));
}

TEST(ParseDimacs, CommentsAndBlankLines) {
  Graph g = parse_dimacs_string("c a comment\n\np edge 4 1\nc another\ne 4 1\n");
  EXPECT_EQ(g.n(), 4u);
  ASSERT_EQ(g.m(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 3}));
}

TEST(ParseDimacs, MalformedLineReportsLineNumber) {
  try {
    parse_dimacs_string("p edge 3 1\nc ok\ne 1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_dimacs_string("e 1 2\np edge 3 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs_string("p edge 3\n"), ParseError);
  EXPECT_THROW(parse_dimacs_string("p edge 3 0\np edge 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_string("c nothing\n"), ParseError);
  EXPECT_THROW(parse_dimacs_string("p edge 3 1\nx 1 2\n"), ParseError);
}

TEST(ParseDimacs, EndpointOutOfRange) {
  EXPECT_THROW(parse_dimacs_string("p edge 3 1\ne 1 4\n"), RangeError);
  EXPECT_THROW(parse_dimacs_string("p edge 3 1\ne 0 2\n"), RangeError);
}

TEST(ParseDimacs, ValidationErrors) {
  EXPECT_THROW(parse_dimacs_string("p edge 3 1\ne 2 2\n"), ValidationError);
  EXPECT_THROW(parse_dimacs_string("p edge 3 2\ne 1 2\ne 2 1\n"), ValidationError);
  EXPECT_THROW(parse_dimacs_string("p edge 3 3\ne 1 2\ne 2 3\n"), ValidationError);
}

TEST(ParseDimacs, ComplementFlag) {
  Graph g = parse_dimacs_string("p edge 4 1\ne 1 2\n", /*complement=*/true);
  EXPECT_EQ(g.m(), 5u);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 3));
}

TEST(ParseDimacs, JohnsonTextRoundTrip) {
  std::ostringstream out;
  write_dimacs(out, gen_johnson_complement(8, 2, 4), "johnson8_2_4 (stable-set form)");
  Graph g = parse_dimacs_string(out.str());
  EXPECT_EQ(g.n(), 28u);
  EXPECT_EQ(g.m(), 168u);
}

TEST(ParseDimacs, WriterRoundTripPreservesEdgeSet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_random(5 + seed, 0.35, seed);
    std::ostringstream out;
    write_dimacs(out, g);
    Graph back = parse_dimacs_string(out.str());
    EXPECT_EQ(back.n(), g.n());
    EXPECT_EQ(edge_set(back), edge_set(g));
  }
}

TEST(GraphInvariants, ConstructorRejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), ValidationError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(Graph(3, {{0, 3}}), RangeError);
}

TEST(GraphInvariants, ComplementAndVertexDeletion) {
  Graph g = gen_random(9, 0.5, 4);
  Graph c = g.complement();
  EXPECT_EQ(g.m() + c.m(), 36u);
  expect_simple(c);
  Graph d = g.without_vertex(3);
  EXPECT_EQ(d.n(), 8u);
  EXPECT_EQ(d.m(), g.m() - g.degree(3));
  EXPECT_EQ(d.adjacent(3, 4), g.adjacent(4, 5));
}

TEST(Paley, FiveIsTheFiveCycle) {
  Graph g = gen_paley(5);
  EXPECT_EQ(g.m(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Paley, TableSizes) {
  EXPECT_EQ(gen_paley(61).m(), 915u);
  EXPECT_EQ(gen_paley(97).m(), 2328u);
}

TEST(Paley, RegularWithExpectedEdgeCount) {
  for (std::uint32_t q : {5u, 13u, 17u, 29u, 37u, 41u, 53u, 61u, 73u, 89u, 97u, 101u}) {
    Graph g = gen_paley(q);
    ASSERT_EQ(g.n(), q);
    EXPECT_EQ(g.m(), static_cast<std::size_t>(q) * (q - 1) / 4) << q;
    for (Vertex v = 0; v < q; ++v) EXPECT_EQ(g.degree(v), (q - 1) / 2);
    expect_simple(g);
  }
}

TEST(Paley, RejectsBadModulus) {
  EXPECT_THROW(gen_paley(7), ArgumentError);   // 3 mod 4
  EXPECT_THROW(gen_paley(21), ArgumentError);  // composite
  EXPECT_THROW(gen_paley(1), ArgumentError);
}

TEST(Torus, TableSizes) {
  const std::array<std::uint32_t, 2> t{11, 11};
  const std::array<std::uint32_t, 3> s{5, 5, 5};
  const std::array<std::uint32_t, 2> small{3, 3};
  EXPECT_EQ(gen_torus(t).n(), 121u);
  EXPECT_EQ(gen_torus(t).m(), 242u);
  EXPECT_EQ(gen_torus(s).n(), 125u);
  EXPECT_EQ(gen_torus(s).m(), 375u);
  EXPECT_EQ(gen_torus(small).m(), 18u);
}

TEST(Torus, RegularAndSimple) {
  const std::vector<std::vector<std::uint32_t>> cases{{3}, {7}, {3, 4}, {4, 5, 3}, {3, 3, 3, 3}};
  for (const auto& dims : cases) {
    Graph g = gen_torus(dims);
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    EXPECT_EQ(g.n(), n);
    EXPECT_EQ(g.m(), n * dims.size());
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_EQ(g.degree(v), 2 * dims.size());
    expect_simple(g);
  }
}

TEST(Torus, AdjacencyIsUnitStepInOneCoordinate) {
  const std::array<std::uint32_t, 2> dims{4, 3};
  Graph g = gen_torus(dims);
  // vertex = x + 4y
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 3));   // x wraps
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_TRUE(g.adjacent(0, 8));   // y wraps
  EXPECT_FALSE(g.adjacent(0, 5));  // diagonal
}

TEST(Torus, RejectsShortCycles) {
  const std::array<std::uint32_t, 2> bad{2, 5};
  EXPECT_THROW(gen_torus(bad), ArgumentError);
  EXPECT_THROW(gen_torus(std::span<const std::uint32_t>{}), ArgumentError);
}

TEST(RandomGraph, Extremes) {
  EXPECT_EQ(gen_random(5, 0.0, 1).m(), 0u);
  EXPECT_EQ(gen_random(5, 1.0, 1).m(), 10u);
}

TEST(RandomGraph, Deterministic) {
  EXPECT_EQ(edge_set(gen_random(15, 0.3, 7)), edge_set(gen_random(15, 0.3, 7)));
  EXPECT_NE(edge_set(gen_random(15, 0.3, 7)), edge_set(gen_random(15, 0.3, 8)));
}

TEST(RandomGraph, RejectsBadProbability) {
  EXPECT_THROW(gen_random(5, -0.1, 1), ArgumentError);
  EXPECT_THROW(gen_random(5, 1.5, 1), ArgumentError);
  EXPECT_THROW(gen_random(0, 0.5, 1), ArgumentError);
}

TEST(BenchmarkFamilies, Sizes) {
  EXPECT_EQ(gen_hamming_complement(6, 2).m(), 192u);
  EXPECT_EQ(gen_hamming_complement(6, 4).m(), 1312u);
  EXPECT_EQ(gen_johnson_complement(8, 2, 4).m(), 168u);
  EXPECT_EQ(gen_johnson_complement(8, 4, 4).n(), 70u);
  EXPECT_EQ(gen_johnson_complement(8, 4, 4).m(), 560u);
  EXPECT_EQ(gen_johnson_complement(16, 2, 4).n(), 120u);
  EXPECT_EQ(gen_johnson_complement(16, 2, 4).m(), 1680u);
  Graph mann = gen_mann_a9_complement();
  EXPECT_EQ(mann.n(), 45u);
  EXPECT_EQ(mann.m(), 72u);
  expect_simple(mann);
}

}  // namespace
}  // namespace stabset
