#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stabset/errors.hpp"
#include "stabset/exact.hpp"
#include "stabset/qubo.hpp"

namespace stabset {
namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

void expect_witness(const Graph& g, const ExactResult& r) {
  ASSERT_EQ(r.witness.size(), g.n());
  EXPECT_TRUE(oracle::stable_by_pairs(g, r.witness));
  EXPECT_EQ(cardinality(r.witness), r.alpha);
}

TEST(BruteForce, CompleteGraph) {
  auto r = brute_force_alpha(complete(5));
  EXPECT_EQ(r.alpha, 1u);
  EXPECT_TRUE(r.proven);
  expect_witness(complete(5), r);
}

TEST(BruteForce, EmptyGraph) {
  Graph g(8, {});
  auto r = brute_force_alpha(g);
  EXPECT_EQ(r.alpha, 8u);
  expect_witness(g, r);
}

TEST(BruteForce, Budget) {
  Graph j = gen_johnson_complement(8, 2, 4);
  ASSERT_EQ(j.n(), 28u);
  EXPECT_THROW(brute_force_alpha(j), BudgetError);
  auto r = brute_force_alpha(j, 28);
  EXPECT_EQ(r.alpha, 4u);
  expect_witness(j, r);
}

TEST(BruteForce, AgreesWithMaskOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_random(4 + seed % 13, 0.35, seed);
    EXPECT_EQ(brute_force_alpha(g).alpha, oracle::alpha_by_masks(g)) << "seed " << seed;
  }
}

TEST(BranchAndBound, SmallCases) {
  EXPECT_EQ(branch_and_bound(complete(5)).alpha, 1u);
  EXPECT_EQ(branch_and_bound(Graph(8, {})).alpha, 8u);
  EXPECT_EQ(branch_and_bound(Graph(0, {})).alpha, 0u);
  EXPECT_EQ(branch_and_bound(gen_paley(5)).alpha, 2u);
}

TEST(BranchAndBound, Paley61) {
  Graph g = gen_paley(61);
  auto r = branch_and_bound(g);
  EXPECT_EQ(r.alpha, 5u);
  EXPECT_TRUE(r.proven);
  EXPECT_EQ(r.upper_bound, 5u);
  expect_witness(g, r);
}

TEST(BranchAndBound, Torus11) {
  const std::uint32_t dims[] = {11, 11};
  Graph g = gen_torus(dims);
  auto r = branch_and_bound(g);
  EXPECT_EQ(r.alpha, 55u);
  EXPECT_TRUE(r.proven);
  expect_witness(g, r);
}

TEST(BranchAndBound, AgreesWithBruteForceOnRandomGraphs) {
  const double densities[] = {0.2, 0.5, 0.8};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = gen_random(18, densities[seed % 3], 1000 + seed);
    auto bb = branch_and_bound(g);
    auto bf = brute_force_alpha(g);
    EXPECT_EQ(bb.alpha, bf.alpha) << "seed " << seed;
    EXPECT_TRUE(bb.proven);
    expect_witness(g, bb);
  }
}

TEST(BranchAndBound, MonotoneUnderVertexDeletion) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gen_random(22, 0.3, rng());
    const std::size_t a = branch_and_bound(g).alpha;
    Graph h = g.without_vertex(static_cast<Vertex>(rng() % g.n()));
    const std::size_t b = branch_and_bound(h).alpha;
    EXPECT_LE(b, a);
    EXPECT_GE(b + 1, a);
  }
}

TEST(BranchAndBound, TimeoutReturnsUnprovenIncumbent) {
  Graph g = gen_johnson_complement(16, 2, 4);
  BranchAndBoundOptions opts;
  opts.time_limit = std::chrono::milliseconds(1);
  auto r = branch_and_bound(g, opts);
  EXPECT_FALSE(r.proven);
  EXPECT_GE(r.upper_bound, r.alpha);
  expect_witness(g, r);
}

}  // namespace
}  // namespace stabset
