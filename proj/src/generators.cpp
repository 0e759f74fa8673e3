#include "uqc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "uqc/error.hpp"
#include "uqc/integer_relation.hpp"

namespace uqc {

const char* to_string(AlgebraKind kind) { return kind == AlgebraKind::U ? "u" : "su"; }

const char* to_string(IndependenceStatus status) {
  switch (status) {
    case IndependenceStatus::HeuristicallyIndependent: return "heuristically_independent";
    case IndependenceStatus::Dependent: return "dependent";
    case IndependenceStatus::ConstructedExact: return "constructed_exact";
  }
  return "unknown";
}

namespace {

std::string describe(std::size_t index, const std::string& label) {
  std::ostringstream os;
  os << "generator " << index + 1;
  if (!label.empty()) os << " ('" << label << "')";
  return os.str();
}

double max_offdiag(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (r != c) worst = std::max(worst, std::abs(m(r, c)));
  return worst;
}

}  // namespace

GeneratorSet validate_set(const RawGeneratorSet& raw, const ValidationOptions& options) {
  const std::size_t d = raw.algebra.dim;
  if (d == 0) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  if (raw.generators.empty()) throw Error(ErrorKind::InvalidInput, "generator set is empty");

  GeneratorSet set;
  set.algebra = raw.algebra;
  set.general_index = raw.general_index;
  set.generators.reserve(raw.generators.size());

  for (std::size_t j = 0; j < raw.generators.size(); ++j) {
    const auto& g = raw.generators[j];
    const std::string who = describe(j, g.label);
    if (g.matrix.dim() != d) {
      std::ostringstream os;
      os << who << " is " << g.matrix.dim() << "x" << g.matrix.dim() << ", expected " << d << "x" << d;
      throw Error(ErrorKind::InvalidInput, os.str(), j);
    }
    if (!g.matrix.all_finite()) throw Error(ErrorKind::InvalidInput, who + " has non-finite entries", j);
    if (!is_skew_hermitian(g.matrix, options.tau_sym)) {
      std::ostringstream os;
      os << who << " is not skew-Hermitian (max |X + X^dagger| = " << skew_defect(g.matrix) << ")";
      throw Error(ErrorKind::NotSkewHermitian, os.str(), j);
    }
    if (raw.algebra.kind == AlgebraKind::SU) {
      const double tr = std::abs(g.matrix.trace());
      if (tr > options.tau_trace * static_cast<double>(d) * g.matrix.max_abs()) {
        std::ostringstream os;
        os << who << " has trace magnitude " << tr << "; su(" << d << ") requires traceless generators";
        throw Error(ErrorKind::NotTraceless, os.str(), j);
      }
    }
    set.generators.push_back(Generator{SkewHermitianMatrix(g.matrix, options.tau_sym), g.label});
  }

  if (!options.require_general_direction) return set;

  const std::size_t gi = raw.general_index;
  if (gi >= set.generators.size()) {
    std::ostringstream os;
    os << "general_index " << gi + 1 << " is out of range for " << set.generators.size() << " generators";
    throw Error(ErrorKind::InvalidInput, os.str());
  }
  const auto& x1 = set.generators[gi].matrix.matrix();
  const std::string who = describe(gi, set.generators[gi].label);
  if (max_offdiag(x1) > options.tau_diag * x1.max_abs()) {
    throw Error(ErrorKind::DesignatedNotDiagonal, who + " is designated as the general direction but is not diagonal", gi);
  }
  if (!options.allow_degenerate && d > 1) {
    const Phases p = phases_of(x1);
    double scale = 0.0;
    for (double t : p.theta) scale = std::max(scale, std::abs(t));
    const double sep = min_phase_separation(p);
    if (!(sep > options.tau_spec * scale)) {
      std::ostringstream os;
      os << who << " has a degenerate spectrum (minimum phase separation " << sep << ")";
      throw Error(ErrorKind::DegenerateSpectrum, os.str(), gi);
    }
  }
  return set;
}

Phases phases_of(const ComplexMatrix& diagonal) {
  Phases p;
  p.theta.reserve(diagonal.dim());
  for (std::size_t i = 0; i < diagonal.dim(); ++i) p.theta.push_back(diagonal(i, i).imag());
  return p;
}

double min_phase_separation(const Phases& phases) {
  std::vector<double> t = phases.theta;
  std::sort(t.begin(), t.end());
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < t.size(); ++i) sep = std::min(sep, t[i] - t[i - 1]);
  return sep;
}

SpectrumIndependenceVerdict check_general_direction(const Phases& phases, const Algebra& algebra, int bound,
                                                    double tau_rel) {
  std::size_t used = phases.theta.size();
  if (algebra.kind == AlgebraKind::SU && used > 0) --used;

  std::vector<long double> x;
  x.reserve(used + 1);
  x.push_back(1.0L);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::size_t i = 0; i < used; ++i) x.push_back(static_cast<long double>(phases.theta[i]) / two_pi);

  const RelationSearch search = find_integer_relation(x, bound, tau_rel);
  SpectrumIndependenceVerdict v;
  double scale = 0.0;
  for (double t : phases.theta) scale = std::max(scale, std::abs(t));
  v.degenerate = phases.theta.size() > 1 && !(min_phase_separation(phases) > kTauSpec * scale);
  v.search_bound = bound;
  v.residual = search.best_residual;
  v.exhaustive = search.method == RelationMethod::Exhaustive;
  if (search.relation) {
    v.status = IndependenceStatus::Dependent;
    v.relation = search.relation->coefficients;
    v.residual = search.relation->residual;
  } else {
    v.status = IndependenceStatus::HeuristicallyIndependent;
  }
  return v;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  for (std::uint64_t n = 2; primes.size() < count; ++n) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(n);
  }
  return primes;
}

namespace {

std::vector<double> constructed_phases(const Algebra& algebra) {
  const std::size_t d = algebra.dim;
  const auto primes = first_primes(d);
  std::vector<double> theta(d);
  for (std::size_t i = 0; i < d; ++i) theta[i] = std::sqrt(static_cast<double>(primes[i]));
  if (algebra.kind == AlgebraKind::SU) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < d; ++i) sum += theta[i];
    theta[d - 1] = -sum;
  }
  return theta;
}

}  // namespace

Generator make_general_direction(const Algebra& algebra) {
  if (algebra.dim == 0) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  const auto theta = constructed_phases(algebra);
  std::vector<Complex> diag(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) diag[i] = Complex(0.0, theta[i]);
  return Generator{SkewHermitianMatrix(ComplexMatrix::diagonal(diag)), "X1"};
}

bool is_constructed_general_direction(const ComplexMatrix& m, const Algebra& algebra) {
  if (m.dim() != algebra.dim || algebra.dim == 0) return false;
  const auto theta = constructed_phases(algebra);
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const Complex expected = r == c ? Complex(0.0, theta[r]) : Complex{};
      if (std::abs(m(r, c) - expected) > 1e-14 * std::max(1.0, std::abs(expected))) return false;
    }
  }
  return true;
}

SpectrumIndependenceVerdict constructed_verdict() {
  SpectrumIndependenceVerdict v;
  v.status = IndependenceStatus::ConstructedExact;
  v.residual = 0.0;
  return v;
}

std::vector<double> epsilon_bounds(const GeneratorSet& set) {
  std::vector<double> out;
  out.reserve(set.generators.size());
  for (const auto& g : set.generators) {
    const double norm = g.matrix.matrix().is_zero() ? 0.0 : operator_norm(g.matrix.matrix());
    out.push_back(norm > 0.0 ? std::numbers::pi / (2.0 * norm) : std::numeric_limits<double>::infinity());
  }
  return out;
}

double epsilon_bound(const GeneratorSet& set) {
  const auto per = epsilon_bounds(set);
  const double best = per.empty() ? std::numeric_limits<double>::infinity() : *std::min_element(per.begin(), per.end());
  if (!std::isfinite(best)) throw Error(ErrorKind::InvalidInput, "every generator is zero; no step-size bound exists");
  return best;
}

}  // namespace uqc
