#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabset/graph.hpp"
#include "stabset/qubo.hpp"

namespace stabset {

/// Geometric temperature ladder: sweep k runs at t_initial * decay()^k, ending at t_final.
struct AnnealSchedule {
  std::size_t sweeps = 1000;
  double t_initial = 1.0;
  double t_final = 0.05;

  double decay() const;
  double temperature(std::size_t sweep) const;
  void validate() const;  ///< throws ArgumentError
};

inline constexpr std::size_t kDefaultSweeps = 1000;
inline constexpr double kDefaultFinalTemperature = 0.05;
inline constexpr double kTargetInitialAcceptance = 0.8;
inline constexpr std::size_t kProbeFlips = 100;

/// Default ladder for q: 1000 sweeps down to 0.05, starting where single-flip
/// Metropolis acceptance over 100 random probe flips (from a random state) is 0.8.
/// If the probes already accept at >= 0.8 at any temperature, the start is set to
/// the mean uphill move (or 1 when there is none).
AnnealSchedule default_schedule(const QuboInstance& q, std::uint64_t seed);

/// Binary state with the local fields h_i = sum_j A_ij x_j and the energy kept up to date under flips.
class FlipState {
public:
  FlipState(const QuboInstance& q, BinaryVector x);

  /// Energy change from flipping bit i.
  Energy delta(Vertex i) const {
    Energy gain = 2 * q_->beta() * static_cast<Energy>(field_[i]) - 1;
    return x_[i] ? -gain : gain;
  }
  void flip(Vertex i);

  const BinaryVector& x() const noexcept { return x_; }
  Energy energy() const noexcept { return energy_; }
  std::uint32_t field(Vertex i) const noexcept { return field_[i]; }

private:
  const QuboInstance* q_;
  BinaryVector x_;
  std::vector<std::uint32_t> field_;
  Energy energy_ = 0;
};

struct SampleSet {
  std::vector<Sample> samples;  ///< one per read, in read order
  std::uint64_t master_seed = 0;
  AnnealSchedule schedule;
  std::string instance_id;
  std::int64_t beta = 1;

  /// Lowest energy; ties go to the lowest read index.
  const Sample& best() const;
  std::size_t best_index() const;
};

/// Multi-read simulated annealing on x^T Q x. Read r starts from a uniformly random
/// state drawn from its own generator, seeded from (master_seed, r), and performs
/// `sweeps` sweeps of n uniformly chosen single-bit Metropolis proposals. The result
/// depends only on the arguments, never on `threads`.
SampleSet sa_sample(const QuboInstance& q, std::size_t reads, const AnnealSchedule& schedule,
                    std::uint64_t master_seed, unsigned threads = 1);

/// Fraction of samples whose selected vertices form a stable set of g.
double feasible_fraction(const SampleSet& s, const Graph& g);

/// Drops vertices until x is stable: repeatedly unselect the selected vertex with the
/// most selected neighbours (ties: higher degree in g, then lower index).
BinaryVector repair(const Graph& g, BinaryVector x);

inline constexpr std::size_t kDefaultImproveBudget = 100000;

/// Local search from a stable x: add free vertices, then try (1,2)-swaps (drop one
/// selected vertex, add two non-adjacent vertices whose only selected neighbour it
/// was), until no move applies or `budget` moves were made. Throws ArgumentError
/// if x is not stable.
BinaryVector local_improve(const Graph& g, BinaryVector x, std::size_t budget = kDefaultImproveBudget);

struct HybridOptions {
  std::size_t reads = 1000;
  std::size_t restarts = 10;
  std::optional<AnnealSchedule> schedule;  ///< default_schedule per restart when empty
  std::size_t improve_budget = kDefaultImproveBudget;
  unsigned threads = 1;
};

/// Best of `restarts` rounds of: anneal, take the lowest-energy read, repair it,
/// improve it locally. Highest cardinality wins, ties to the earliest restart. The
/// returned sample is always a stable set.
Sample hybrid_solve(const Graph& g, std::int64_t beta, std::uint64_t master_seed,
                    const HybridOptions& options = {});

}  // namespace stabset
