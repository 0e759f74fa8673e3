#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "uqc/tolerances.hpp"

namespace uqc {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  // Throws InvalidInput if the rows are ragged, empty, or contain NaN/Inf.
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static ComplexMatrix diagonal(std::span<const Complex> entries);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }
  // Interleaved (re, im) view for the SIMD kernels.
  const double* raw() const noexcept { return reinterpret_cast<const double*>(data_.data()); }
  double* raw() noexcept { return reinterpret_cast<double*>(data_.data()); }

  double max_abs() const;
  bool all_finite() const;
  bool is_zero() const;
  Complex trace() const;
  ComplexMatrix adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// Matrix product through the active SIMD kernel.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

// max |(A + A^dagger)_ij|
double skew_defect(const ComplexMatrix& a);
bool is_skew_hermitian(const ComplexMatrix& a, double tau_sym = kTauSym);

// A complex matrix known to satisfy A^dagger = -A within tau_sym.
class SkewHermitianMatrix {
 public:
  // Throws NotSkewHermitian (or InvalidInput for non-finite entries).
  explicit SkewHermitianMatrix(ComplexMatrix inner, double tau_sym = kTauSym);

  const ComplexMatrix& matrix() const noexcept { return inner_; }
  std::size_t dim() const noexcept { return inner_.dim(); }

 private:
  ComplexMatrix inner_;
};

// AB - BA, no invariant check.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
// AB - BA; throws InvalidInput on dimension mismatch.
SkewHermitianMatrix commutator(const SkewHermitianMatrix& a, const SkewHermitianMatrix& b);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

// exp(tA) through the unitary eigendecomposition of the Hermitian matrix -iA.
// Throws NumericalFailure if the eigensolver does not converge.
ComplexMatrix matrix_exp(const SkewHermitianMatrix& a, double t);

// Real embedding of length 2 d^2: real parts row-major, then imaginary parts.
std::vector<double> embed(const ComplexMatrix& a);
ComplexMatrix unembed(std::span<const double> v, std::size_t dim);

struct RankResult {
  std::size_t rank = 0;
  // Orthonormal spanning set of the retained subspace.
  std::vector<std::vector<double>> basis;
  std::vector<double> singular_values;
};

// Number of singular values above tau_rank * sigma_max of the matrix whose rows
// are `vectors`. Throws InvalidInput on ragged input or tau_rank <= 0.
RankResult numerical_rank(std::span<const std::vector<double>> vectors, double tau_rank = kTauRank);

}  // namespace uqc
