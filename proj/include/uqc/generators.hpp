#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uqc/linalg.hpp"
#include "uqc/tolerances.hpp"

namespace uqc {

enum class AlgebraKind { U, SU };

// Target Lie algebra u(d) or su(d).
struct Algebra {
  AlgebraKind kind = AlgebraKind::U;
  std::size_t dim = 1;

  // Real dimension: d^2 for u(d), d^2 - 1 for su(d).
  std::size_t target_dimension() const noexcept {
    return kind == AlgebraKind::U ? dim * dim : dim * dim - 1;
  }
  friend bool operator==(const Algebra&, const Algebra&) = default;
};

const char* to_string(AlgebraKind kind);

struct Generator {
  SkewHermitianMatrix matrix;
  std::string label;
};

// Generators as read from a document, before any invariant is checked.
struct RawGenerator {
  std::string label;
  ComplexMatrix matrix;
};

struct RawGeneratorSet {
  Algebra algebra;
  std::vector<RawGenerator> generators;
  std::size_t general_index = 0;
};

// A validated set. Build through validate_set(); the remaining library
// functions assume its invariants.
struct GeneratorSet {
  Algebra algebra;
  std::vector<Generator> generators;
  std::size_t general_index = 0;

  std::size_t dim() const noexcept { return algebra.dim; }
  const Generator& designated() const { return generators.at(general_index); }
};

struct ValidationOptions {
  double tau_sym = kTauSym;
  double tau_trace = kTauTrace;
  double tau_diag = kTauDiag;
  double tau_spec = kTauSpec;
  // Off for uses that need no general direction (the epsilon bound).
  bool require_general_direction = true;
  // Accept a repeated eigenphase in the designated generator; the universality
  // check then reports the resulting rational relation instead of failing.
  bool allow_degenerate = false;
};

GeneratorSet validate_set(const RawGeneratorSet& raw, const ValidationOptions& options = {});

// The theta_j of X = i diag(theta_1, ..., theta_d).
struct Phases {
  std::vector<double> theta;
};

Phases phases_of(const ComplexMatrix& diagonal);

// Smallest |theta_i - theta_j| over i != j (infinity for d = 1).
double min_phase_separation(const Phases& phases);

enum class IndependenceStatus { HeuristicallyIndependent, Dependent, ConstructedExact };

const char* to_string(IndependenceStatus status);

struct SpectrumIndependenceVerdict {
  IndependenceStatus status = IndependenceStatus::HeuristicallyIndependent;
  // Coefficients for (1, theta_1/2pi, ..., theta_n/2pi).
  std::optional<std::vector<std::int64_t>> relation;
  int search_bound = kRelationBound;
  double residual = 0.0;
  bool exhaustive = false;
  // Two phases coincide (within tau_spec); only reachable with allow_degenerate.
  bool degenerate = false;
};

// Searches for an integer relation of height <= bound among
// (1, theta_1/2pi, ..., theta_d/2pi) for u(d), or with the last phase dropped
// for su(d).
SpectrumIndependenceVerdict check_general_direction(const Phases& phases, const Algebra& algebra,
                                                    int bound = kRelationBound, double tau_rel = kTauRel);

// i diag(sqrt p_1, ..., sqrt p_d) over the first d primes; for su(d) the last
// entry is replaced by minus the sum of the others.
Generator make_general_direction(const Algebra& algebra);

// True if `m` is entrywise the output of make_general_direction(algebra).
bool is_constructed_general_direction(const ComplexMatrix& m, const Algebra& algebra);

// The verdict attached to a constructed direction.
SpectrumIndependenceVerdict constructed_verdict();

std::vector<std::uint64_t> first_primes(std::size_t count);

// pi / (2 ||X_j||_op) per generator, +infinity for a zero generator.
std::vector<double> epsilon_bounds(const GeneratorSet& set);

// Minimum of epsilon_bounds(); for 0 < eps < result every ||exp(eps X_j) - I||_op < sqrt 2.
// Throws InvalidInput if every generator is zero.
double epsilon_bound(const GeneratorSet& set);

}  // namespace uqc
