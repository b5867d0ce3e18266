#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "stabset/graph.hpp"

namespace stabset {

using Energy = std::int64_t;
using DenseQubo = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Q = -I + beta * A for a graph with adjacency matrix A.
///
/// Stored sparse: the diagonal is implicitly -1 and every coupling {i,j} carries
/// weight beta in both Q(i,j) and Q(j,i). Energies are x^T Q x over the full
/// symmetric matrix, so a violated edge costs 2 * beta.
class QuboInstance {
public:
  QuboInstance() = default;
  /// Throws ArgumentError for beta < 1, plus the Graph constructor's errors for bad couplings.
  QuboInstance(std::size_t n, std::int64_t beta, std::vector<Edge> couplings);

  std::size_t n() const noexcept { return n_; }
  std::int64_t beta() const noexcept { return beta_; }
  std::span<const Edge> couplings() const noexcept { return couplings_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::int64_t entry(Vertex i, Vertex j) const;
  DenseQubo dense() const;

private:
  std::size_t n_ = 0;
  std::int64_t beta_ = 1;
  std::vector<Edge> couplings_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// One binary assignment with its derived quantities.
struct Sample {
  BinaryVector x;
  std::size_t cardinality = 0;
  std::size_t violations = 0;
  Energy energy = 0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

QuboInstance build_qubo(const Graph& g, std::int64_t beta);

/// x^T Q x.
Energy energy(const QuboInstance& q, std::span<const std::uint8_t> x);

/// Number of edges with both endpoints selected, i.e. x^T A x / 2.
std::size_t violations(const Graph& g, std::span<const std::uint8_t> x);
std::size_t violations(const QuboInstance& q, std::span<const std::uint8_t> x);

std::size_t cardinality(std::span<const std::uint8_t> x);

/// Exact stable-set test by edge scan.
bool is_stable(const Graph& g, std::span<const std::uint8_t> x);

/// The absolute-value screen |e^T x| == |x^T Q x|.
///
/// Every stable set passes. The converse does not hold: on the 4-cycle with
/// beta = 1 the all-ones vector has cardinality 4 and energy -4 + 8 = 4, so it
/// passes while violating every edge. Use is_stable() to decide feasibility.
bool abs_energy_matches_cardinality(const QuboInstance& q, std::span<const std::uint8_t> x);

/// Sample with every derived field computed from q.
Sample make_sample(const QuboInstance& q, BinaryVector x);

}  // namespace stabset
