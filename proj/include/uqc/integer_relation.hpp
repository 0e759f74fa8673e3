#pragma once

// Integer-relation search: find nonzero integers c with max |c_i| <= bound and
// |sum c_i x_i| <= tau. Floating-point inputs make this a heuristic: a miss
// means "no relation of that height at this precision", never a proof.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace uqc {

struct IntegerRelation {
  std::vector<std::int64_t> coefficients;  // first nonzero entry positive
  double residual = 0.0;                   // |sum c_i x_i|
};

enum class RelationMethod { Exhaustive, LatticeReduction };

struct RelationSearch {
  std::optional<IntegerRelation> relation;
  // Smallest |c . x| the search encountered among bounded candidates
  // (the relation's residual when one was found).
  double best_residual = 0.0;
  RelationMethod method = RelationMethod::Exhaustive;
};

// (2 bound + 1)^n <= 1e6.
bool exhaustive_search_feasible(std::size_t n, int bound);

// Enumerates every coefficient vector. Among relations within tau, reports the
// one with the smallest max-norm, ties broken by residual.
RelationSearch exhaustive_relation_search(std::span<const long double> x, int bound, double tau);

// LLL on the lattice spanned by rows (e_i, x_i / tau).
RelationSearch lattice_relation_search(std::span<const long double> x, int bound, double tau);

// Exhaustive when feasible, lattice reduction otherwise.
RelationSearch find_integer_relation(std::span<const long double> x, int bound, double tau);

}  // namespace uqc
