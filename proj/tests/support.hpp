#pragma once

// Fixtures and test-only oracles. Nothing here calls the code under test for
// the quantity it is used to check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "uqc/generators.hpp"
#include "uqc/linalg.hpp"

namespace uqc::test {

inline constexpr Complex I1{0.0, 1.0};

inline ComplexMatrix elementary(std::size_t d, std::size_t r, std::size_t c) {
  ComplexMatrix m(d);
  m(r, c) = 1.0;
  return m;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim() * b.dim();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) m(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return m;
}

inline ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
inline ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

// X1 = i diag(sqrt2, sqrt3, sqrt5), X2 = rotation generator on {e1, e2}.
inline RawGeneratorSet u3_example_raw() {
  RawGeneratorSet raw;
  raw.algebra = {AlgebraKind::U, 3};
  raw.generators.push_back({"X1", ComplexMatrix::diagonal(std::vector<Complex>{
                                      I1 * std::sqrt(2.0), I1 * std::sqrt(3.0), I1 * std::sqrt(5.0)})});
  raw.generators.push_back({"X2", ComplexMatrix::from_rows({{0.0, 1.0, 0.0}, {-1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}})});
  return raw;
}

// Two qubits, basis |00>, |01>, |10>, |11>.
inline ComplexMatrix two_qubit_drift(double w1 = std::sqrt(2.0), double w2 = std::sqrt(3.0),
                                     double j = std::sqrt(5.0)) {
  const auto id = ComplexMatrix::identity(2);
  ComplexMatrix h = Complex(w1) * kron(pauli_z(), id);
  h += Complex(w2) * kron(id, pauli_z());
  h += Complex(j) * kron(pauli_z(), pauli_z());
  return Complex(0.0, -1.0) * h;
}

inline RawGeneratorSet two_qubit_raw(bool both_drives) {
  const auto id = ComplexMatrix::identity(2);
  RawGeneratorSet raw;
  raw.algebra = {AlgebraKind::SU, 4};
  raw.generators.push_back({"X_drift", two_qubit_drift()});
  raw.generators.push_back({"X_x1", Complex(0.0, -1.0) * kron(pauli_x(), id)});
  if (both_drives) raw.generators.push_back({"X_x2", Complex(0.0, -1.0) * kron(id, pauli_x())});
  return raw;
}

inline ComplexMatrix random_skew_hermitian(std::size_t d, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    m(r, r) = Complex(0.0, n(rng));
    for (std::size_t c = r + 1; c < d; ++c) {
      m(r, c) = Complex(n(rng), n(rng));
      m(c, r) = -std::conj(m(r, c));
    }
  }
  return m;
}

// Zero diagonal; each pair (r, c) present with probability p.
inline ComplexMatrix random_sparse_offdiag(std::size_t d, double p, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::bernoulli_distribution keep(p);
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r + 1; c < d; ++c)
      if (keep(rng)) {
        m(r, c) = Complex(n(rng), n(rng));
        m(c, r) = -std::conj(m(r, c));
      }
  return m;
}

inline ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXcd z(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) z(r, c) = Complex(n(rng), n(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  ComplexMatrix u(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) u(r, c) = q(r, c);
  return u;
}

inline ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Complex s{};
      for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

// Dimension of the real span of all brackets, grown level by level and ranked
// by a full SVD of the stacked real embeddings at every level. Independent of
// the incremental Gram-Schmidt used by lie_closure().
inline std::size_t svd_closure_dimension(const std::vector<ComplexMatrix>& gens, double tau = 1e-9) {
  const std::size_t d = gens.front().dim();
  auto to_real = [d](const ComplexMatrix& m) {
    Eigen::VectorXd v(2 * d * d);
    for (std::size_t i = 0; i < d * d; ++i) {
      v(i) = m(i / d, i % d).real();
      v(d * d + i) = m(i / d, i % d).imag();
    }
    return v;
  };
  auto span_basis = [&](const std::vector<ComplexMatrix>& ms) {
    Eigen::MatrixXd a(2 * d * d, ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) a.col(k) = to_real(ms[k]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
    std::vector<ComplexMatrix> out;
    const auto& s = svd.singularValues();
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) <= tau * s(0)) break;
      ComplexMatrix m(d);
      for (std::size_t i = 0; i < d * d; ++i) m(i / d, i % d) = Complex(svd.matrixU()(i, k), svd.matrixU()(d * d + i, k));
      out.push_back(m);
    }
    return out;
  };
  std::vector<ComplexMatrix> basis = span_basis(gens);
  while (true) {
    std::vector<ComplexMatrix> words = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        words.push_back(naive_product(basis[i], basis[j]) - naive_product(basis[j], basis[i]));
    auto next = span_basis(words);
    if (next.size() == basis.size()) return basis.size();
    basis = std::move(next);
  }
}

inline std::vector<ComplexMatrix> matrices_of(const GeneratorSet& set) {
  std::vector<ComplexMatrix> out;
  for (const auto& g : set.generators) out.push_back(g.matrix.matrix());
  return out;
}

}  // namespace uqc::test
