#include "uqc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "uqc/error.hpp"
#include "uqc/simd/kernels.hpp"

namespace uqc {

namespace {

// Removes the span(basis) component of v (two passes) and returns |v|.
double orthogonalize(std::vector<double>& v, const std::vector<std::vector<double>>& basis) {
  const auto& k = simd::active_kernels();
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const double c = k.dot(v.size(), b.data(), v.data());
      k.axpy(v.size(), -c, b.data(), v.data());
    }
  }
  return std::sqrt(k.dot(v.size(), v.data(), v.data()));
}

ComplexMatrix skew_part(const ComplexMatrix& m) {
  ComplexMatrix out = m;
  out -= m.adjoint();
  out *= Complex(0.5);
  return out;
}

// Commutators are exactly traceless and skew-Hermitian; drop the rounding
// error outside that subspace.
ComplexMatrix traceless_skew_part(const ComplexMatrix& m) {
  ComplexMatrix out = skew_part(m);
  const Complex shift = out.trace() / static_cast<double>(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out(i, i) -= shift;
  return out;
}

double norm(const std::vector<double>& v) {
  return std::sqrt(simd::active_kernels().dot(v.size(), v.data(), v.data()));
}

}  // namespace

LieClosureReport lie_closure(const GeneratorSet& set, const ClosureOptions& options) {
  const std::size_t d = set.dim();
  const std::size_t guard = options.max_dim_guard == 0 ? d * d : options.max_dim_guard;
  if (guard < d * d) throw Error(ErrorKind::InvalidInput, "max_dim_guard must be at least d^2");

  LieClosureReport report;
  report.matrix_dim = d;
  report.target_dimension = set.algebra.target_dimension();
  if (set.algebra.kind == AlgebraKind::U) {
    report.traceless_in_u_mode = std::all_of(set.generators.begin(), set.generators.end(), [&](const Generator& g) {
      const auto& m = g.matrix.matrix();
      return std::abs(m.trace()) <= kTauTrace * static_cast<double>(d) * m.max_abs();
    });
  }

  const bool traceless = set.algebra.kind == AlgebraKind::SU || report.traceless_in_u_mode;
  const auto clean = [&](const ComplexMatrix& m) { return traceless ? traceless_skew_part(m) : skew_part(m); };

  std::vector<std::vector<double>> seeds;
  for (const auto& g : set.generators) seeds.push_back(embed(clean(g.matrix.matrix())));
  auto& basis = report.basis;
  basis = numerical_rank(seeds, options.tau_rank).basis;

  std::vector<ComplexMatrix> mats;
  for (const auto& b : basis) mats.push_back(unembed(b, d));

  // Each round brackets the newest elements against the whole basis and
  // strips the current span from the results before ranking them together.
  const std::size_t len = 2 * d * d;
  std::size_t lo = 0;
  std::size_t hi = basis.size();
  while (lo < hi) {
    ++report.rounds;
    std::vector<std::vector<double>> residuals;
    for (std::size_t p = lo; p < hi; ++p) {
      for (std::size_t q = 0; q < hi; ++q) {
        if (q >= lo && q <= p) continue;  // self, or already paired this round
        ComplexMatrix c = commutator(mats[p], mats[q]);
        c = traceless_skew_part(c);
        std::vector<double> v = embed(c);
        if (norm(v) == 0.0) continue;
        if (orthogonalize(v, basis) <= options.tau_rank) continue;
        residuals.push_back(std::move(v));
      }
    }
    // Pivoted Gram-Schmidt over the residual block: take the largest residual,
    // strip it from the rest, repeat. Only axpy updates, so entries that are
    // exactly zero in every bracket stay zero.
    std::vector<double> norms(residuals.size());
    for (std::size_t k = 0; k < residuals.size(); ++k) norms[k] = norm(residuals[k]);
    while (true) {
      const auto it = std::max_element(norms.begin(), norms.end());
      if (it == norms.end() || *it <= options.tau_rank) break;
      std::vector<double> v = std::move(residuals[static_cast<std::size_t>(it - norms.begin())]);
      *it = 0.0;
      const double rn = orthogonalize(v, basis);
      if (rn <= options.tau_rank) continue;
      for (auto& x : v) x /= rn;
      v = embed(clean(unembed(v, d)));
      const double wn = orthogonalize(v, basis);
      for (auto& x : v) x /= wn;
      mats.push_back(unembed(v, d));
      basis.push_back(std::move(v));
      if (basis.size() > guard) {
        std::ostringstream os;
        os << "Lie closure exceeded " << guard << " elements; rank tolerance is misconfigured";
        throw Error(ErrorKind::NumericalFailure, os.str());
      }
      const auto& k = simd::active_kernels();
      const auto& q = basis.back();
      for (std::size_t j = 0; j < residuals.size(); ++j) {
        if (norms[j] == 0.0) continue;
        k.axpy(len, -k.dot(len, q.data(), residuals[j].data()), q.data(), residuals[j].data());
        norms[j] = norm(residuals[j]);
      }
    }
    lo = hi;
    hi = basis.size();
  }
  report.dimension = basis.size();

  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      std::vector<double> v = embed(commutator(mats[i], mats[j]));
      const double cn = norm(v);
      if (cn == 0.0) continue;
      const double rn = orthogonalize(v, basis);
      report.residual_max = std::max(report.residual_max, rn / std::max(1.0, cn));
    }
  }
  return report;
}

Partition closure_block_partition(const LieClosureReport& report, const EdgeThreshold& threshold) {
  std::vector<ComplexMatrix> mats;
  mats.reserve(report.basis.size());
  for (const auto& b : report.basis) mats.push_back(unembed(b, report.matrix_dim));
  return connected_components(build_coupling_graph(mats, report.matrix_dim, std::nullopt, threshold));
}

std::vector<std::vector<std::size_t>> coordinate_subspace_scan(const GeneratorSet& set,
                                                               const EdgeThreshold& threshold) {
  const std::size_t d = set.dim();
  if (d > kMaxScanDim) {
    std::ostringstream os;
    os << "coordinate subspace scan enumerates 2^d subsets and is limited to d <= " << kMaxScanDim
       << "; use the coupling-graph check for d = " << d;
    throw Error(ErrorKind::InvalidInput, os.str());
  }
  // reach[c]: rows r != c that column c feeds into, over all generators.
  std::vector<std::uint32_t> reach(d, 0);
  for (const auto& g : set.generators) {
    const auto& x = g.matrix.matrix();
    const double cutoff = threshold.cutoff_for(x);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r)
        if (r != c && std::abs(x(r, c)) > cutoff) reach[c] |= std::uint32_t{1} << r;
  }

  std::vector<std::vector<std::size_t>> out;
  const std::uint32_t full = d == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << d) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    bool invariant = true;
    for (std::size_t c = 0; c < d && invariant; ++c)
      if ((s >> c) & 1u) invariant = (reach[c] & ~s) == 0;
    if (!invariant) continue;
    std::vector<std::size_t> members;
    for (std::size_t c = 0; c < d; ++c)
      if ((s >> c) & 1u) members.push_back(c);
    out.push_back(std::move(members));
  }
  return out;
}


bool oracle_agrees(const UniversalityVerdict& verdict, const LieClosureReport& report,
                   const Partition& closure_partition) {
  const bool predicted_full = verdict.status != UniversalityStatus::Reducible;
  if (predicted_full != report.full()) return false;
  return predicted_full || closure_partition == verdict.components;
}

}  // namespace uqc
