#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "stabset/errors.hpp"
#include "stabset/qubo.hpp"

namespace stabset {
namespace {

// Greedy stable set over a shuffled vertex order.
BinaryVector random_stable(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> order(g.n());
  for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  BinaryVector x(g.n(), 0);
  for (Vertex v : order) {
    bool free = (rng() & 3U) != 0;
    for (Vertex u : g.neighbors(v)) free = free && !x[u];
    if (free) x[v] = 1;
  }
  return x;
}

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph four_cycle() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

BinaryVector random_vector(std::mt19937_64& rng, std::size_t n) {
  BinaryVector x(n);
  for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1U);
  return x;
}

TEST(BuildQubo, EmptyGraphIsMinusIdentity) {
  auto q = build_qubo(Graph(2, {}), 1);
  DenseQubo expected(2, 2);
  expected << -1, 0, 0, -1;
  EXPECT_EQ(q.dense(), expected);
}

TEST(BuildQubo, SingleEdge) {
  auto q = build_qubo(Graph(2, {{0, 1}}), 10);
  DenseQubo expected(2, 2);
  expected << -1, 10, 10, -1;
  EXPECT_EQ(q.dense(), expected);
  EXPECT_EQ(q.entry(0, 1), 10);
  EXPECT_EQ(q.entry(1, 1), -1);
}

TEST(BuildQubo, Paley61Beta100) {
  auto q = build_qubo(gen_paley(61), 100);
  DenseQubo d = q.dense();
  EXPECT_EQ(d.rows(), 61);
  EXPECT_TRUE((d - d.transpose()).isZero());
  EXPECT_TRUE((d.diagonal().array() == -1).all());
  EXPECT_EQ((d.array() == 100).count(), 2 * 915);
  EXPECT_EQ((d.array() != 0).count(), 61 + 2 * 915);
}

TEST(BuildQubo, MatchesMinusIdentityPlusBetaA) {
  Graph g = gen_random(14, 0.4, 9);
  for (std::int64_t beta : {1, 10, 100}) {
    DenseQubo expected = -DenseQubo::Identity(14, 14) +
                         beta * oracle::dense_adjacency(g).cast<std::int64_t>();
    EXPECT_EQ(build_qubo(g, beta).dense(), expected);
  }
}

TEST(BuildQubo, RejectsBetaBelowOne) {
  EXPECT_THROW(build_qubo(triangle(), 0), ArgumentError);
  EXPECT_THROW(build_qubo(triangle(), -3), ArgumentError);
}

TEST(Energy, HandComputed) {
  auto q = build_qubo(Graph(2, {{0, 1}}), 1);
  EXPECT_EQ(energy(q, BinaryVector{1, 1}), 0);
  EXPECT_EQ(energy(q, BinaryVector{1, 0}), -1);
  EXPECT_EQ(energy(q, BinaryVector{0, 0}), 0);
}

TEST(Energy, StableSetsScoreMinusCardinalityForEveryBeta) {
  Graph g = gen_random(10, 0.3, 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryVector x = random_vector(rng, g.n());
    if (!oracle::stable_by_pairs(g, x)) continue;
    for (std::int64_t beta : {1, 10, 100})
      EXPECT_EQ(energy(build_qubo(g, beta), x), -static_cast<Energy>(cardinality(x)));
  }
}

TEST(Energy, ExhaustiveMinimumIsMinusAlpha) {
  Graph g = gen_random(12, 0.4, 3);
  // Frozen from the bitmask oracle: alpha(G(12, 0.4, seed 3)) = 6.
  ASSERT_EQ(oracle::alpha_by_masks(g), 6u);
  auto scan = oracle::scan_qubo(build_qubo(g, 1));
  EXPECT_EQ(scan.minimum, -6);
}

TEST(Energy, LengthMismatch) {
  auto q = build_qubo(triangle(), 1);
  EXPECT_THROW(energy(q, BinaryVector{1, 0}), ArgumentError);
  EXPECT_THROW(violations(triangle(), BinaryVector{1}), ArgumentError);
  EXPECT_THROW(is_stable(triangle(), BinaryVector{1, 0, 0, 0}), ArgumentError);
  EXPECT_THROW(abs_energy_matches_cardinality(q, BinaryVector{}), ArgumentError);
}

TEST(Violations, Examples) {
  EXPECT_EQ(violations(triangle(), BinaryVector{1, 1, 1}), 3u);
  EXPECT_EQ(violations(triangle(), BinaryVector{0, 1, 0}), 0u);
  EXPECT_EQ(violations(triangle(), BinaryVector{0, 0, 0}), 0u);
}

TEST(Violations, MatchesHalfQuadraticForm) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gen_random(3 + seed % 13, 0.5, seed);
    auto a = oracle::dense_adjacency(g);
    for (int k = 0; k < 20; ++k) {
      BinaryVector x = random_vector(rng, g.n());
      EXPECT_EQ(static_cast<std::int64_t>(violations(g, x)), oracle::dense_half_quadratic(a, x));
    }
  }
}

TEST(IsStable, Examples) {
  EXPECT_FALSE(is_stable(triangle(), BinaryVector{1, 1, 0}));
  for (Vertex v = 0; v < 3; ++v) {
    BinaryVector x(3, 0);
    x[v] = 1;
    EXPECT_TRUE(is_stable(triangle(), x));
  }
}

TEST(IsStable, AgreesWithPairScanOnRandomPairs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    Graph g = gen_random(n, 0.15 + 0.1 * static_cast<double>(trial % 5), rng());
    BinaryVector x(n);
    for (auto& b : x) b = (rng() % 4 == 0) ? 1 : 0;
    EXPECT_EQ(is_stable(g, x), oracle::stable_by_pairs(g, x));
    EXPECT_EQ(is_stable(g, x), violations(g, x) == 0);
  }
}

TEST(AbsEnergyScreen, StableSetsPass) {
  auto q = build_qubo(four_cycle(), 1);
  EXPECT_TRUE(abs_energy_matches_cardinality(q, BinaryVector{1, 0, 1, 0}));
  EXPECT_TRUE(abs_energy_matches_cardinality(q, BinaryVector{0, 0, 0, 0}));
}

TEST(AbsEnergyScreen, FlagsTriangleEdge) {
  auto q = build_qubo(triangle(), 1);
  EXPECT_FALSE(abs_energy_matches_cardinality(q, BinaryVector{1, 1, 0}));
}

TEST(AbsEnergyScreen, FourCycleAllOnesSlipsThrough) {
  auto q = build_qubo(four_cycle(), 1);
  BinaryVector ones{1, 1, 1, 1};
  EXPECT_EQ(cardinality(ones), 4u);
  EXPECT_EQ(violations(four_cycle(), ones), 4u);
  EXPECT_EQ(energy(q, ones), 4);
  EXPECT_TRUE(abs_energy_matches_cardinality(q, ones));
  EXPECT_FALSE(is_stable(four_cycle(), ones));
}

TEST(AbsEnergyScreen, NeverRejectsAFeasibleVector) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = gen_random(2 + rng() % 12, 0.3, rng());
    BinaryVector x = random_stable(g, rng);
    for (std::int64_t beta : {1, 10, 100})
      EXPECT_TRUE(abs_energy_matches_cardinality(build_qubo(g, beta), x));
  }
}

TEST(EnergyProperties, IdentityOnRandomTriples) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    Graph g = gen_random(1 + rng() % 25, static_cast<double>(rng() % 100) / 100.0, rng());
    std::int64_t beta = 1 + static_cast<std::int64_t>(rng() % 200);
    BinaryVector x = random_vector(rng, g.n());
    auto q = build_qubo(g, beta);
    Energy e = energy(q, x);
    EXPECT_EQ(e, -static_cast<Energy>(cardinality(x)) + 2 * beta * static_cast<Energy>(violations(g, x)));
    EXPECT_EQ(e, oracle::dense_energy(oracle::dense_adjacency(g), beta, x));
    Sample s = make_sample(q, x);
    EXPECT_EQ(s.energy, e);
    EXPECT_EQ(s.violations == 0, is_stable(g, x));
  }
}

TEST(EnergyProperties, ScaleInBeta) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = gen_random(2 + rng() % 15, 0.4, rng());
    BinaryVector x = random_vector(rng, g.n());
    Energy prev = energy(build_qubo(g, 1), x);
    for (std::int64_t beta = 2; beta <= 6; ++beta) {
      Energy cur = energy(build_qubo(g, beta), x);
      if (is_stable(g, x))
        EXPECT_EQ(cur, prev);
      else
        EXPECT_GT(cur, prev);
      prev = cur;
    }
  }
}

TEST(EnergyProperties, GroundTruthIdentityUpToTwentyVertices) {
  const std::vector<std::pair<std::size_t, double>> cases{{8, 0.5}, {14, 0.3}, {17, 0.6}, {20, 0.2}};
  std::uint64_t seed = 100;
  for (auto [n, p] : cases) {
    Graph g = gen_random(n, p, seed++);
    const auto alpha = static_cast<Energy>(oracle::alpha_by_masks(g));
    for (std::int64_t beta : {1, 10, 100}) {
      auto scan = oracle::scan_qubo(build_qubo(g, beta));
      EXPECT_EQ(scan.minimum, -alpha) << "n=" << n << " beta=" << beta;
      for (auto mask : scan.minimizers) {
        BinaryVector x = oracle::from_mask(mask, n);
        EXPECT_TRUE(oracle::stable_by_pairs(g, x));
        EXPECT_EQ(static_cast<Energy>(cardinality(x)), alpha);
      }
    }
  }
}

}  // namespace
}  // namespace stabset
