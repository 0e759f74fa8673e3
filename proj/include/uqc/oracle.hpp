#pragma once

// Brute-force checks that share no code path with the graph criterion: the
// real Lie algebra generated by the set, built by iterated commutators with
// rank tracking, and an exhaustive scan of coordinate subspaces.

#include <cstddef>
#include <vector>

#include "uqc/generators.hpp"
#include "uqc/universality.hpp"

namespace uqc {

struct ClosureOptions {
  double tau_rank = kTauRank;
  // Largest basis allowed before giving up; 0 means d^2. Must be >= d^2.
  std::size_t max_dim_guard = 0;
};

struct LieClosureReport {
  std::size_t matrix_dim = 0;
  // Orthonormal real 2d^2-vectors (see embed()).
  std::vector<std::vector<double>> basis;
  std::size_t dimension = 0;
  std::size_t target_dimension = 0;
  std::size_t rounds = 0;
  // Largest relative residual of [B_i, B_j] outside span(basis) over all pairs.
  double residual_max = 0.0;
  // u(d) requested but every generator is traceless: the closure can reach at
  // most d^2 - 1.
  bool traceless_in_u_mode = false;

  std::size_t effective_target() const noexcept {
    return traceless_in_u_mode ? target_dimension - 1 : target_dimension;
  }
  bool full() const noexcept { return dimension == effective_target(); }
};

// Throws InvalidInput for a guard below d^2 and NumericalFailure when the
// basis outgrows the guard.
LieClosureReport lie_closure(const GeneratorSet& set, const ClosureOptions& options = {});

// Coupling-graph partition of the closure basis elements.
Partition closure_block_partition(const LieClosureReport& report, const EdgeThreshold& threshold = {});

inline constexpr std::size_t kMaxScanDim = 20;

// Every nonempty proper index set S (0-based, ascending) with X_j e_c in
// span{e_r : r in S} for all c in S and all j. Throws InvalidInput for d > 20.
std::vector<std::vector<std::size_t>> coordinate_subspace_scan(const GeneratorSet& set,
                                                               const EdgeThreshold& threshold = {});

// Graph verdict vs closure: universal (or conditionally universal) iff the
// closure is full, and for reducible verdicts the closure partition matches.
bool oracle_agrees(const UniversalityVerdict& verdict, const LieClosureReport& report,
                   const Partition& closure_partition);

}  // namespace uqc
