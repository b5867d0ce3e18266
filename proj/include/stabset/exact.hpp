#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

#include "stabset/graph.hpp"

namespace stabset {

struct ExactResult {
  std::size_t alpha = 0;       ///< best stable-set cardinality found
  BinaryVector witness;        ///< indicator of a stable set of size alpha
  std::size_t upper_bound = 0; ///< proven upper bound on the stability number
  bool proven = false;         ///< alpha == stability number (search completed)
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
};

/// Stability number by subset enumeration (include/exclude each vertex in index
/// order, pruning only with the trivial "remaining vertices" bound).
/// Throws BudgetError when g.n() > max_n.
ExactResult brute_force_alpha(const Graph& g, std::size_t max_n = 26);

struct BranchAndBoundOptions {
  std::chrono::duration<double> time_limit = std::chrono::seconds(600);
};

/// Exact stability number by branch and bound.
///
/// Branches include/exclude on the vertex of highest residual degree (lowest index
/// on ties). Each subproblem is bounded by a greedy partition into cliques and, when
/// that does not prune, by a partition into cliques, chordless odd cycles and a
/// bipartite remainder. Vertices of residual degree <= 1 and simplicial vertices are
/// taken without branching. Single-threaded and deterministic.
///
/// On timeout the best incumbent is returned with proven == false.
ExactResult branch_and_bound(const Graph& g, const BranchAndBoundOptions& options = {});

}  // namespace stabset
