#include "uqc/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "uqc/error.hpp"
#include "uqc/simd/kernels.hpp"

namespace uqc {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const EigenMatrix>;

ConstMap as_eigen(const ComplexMatrix& m) {
  return ConstMap(m.entries().data(), static_cast<Eigen::Index>(m.dim()),
                  static_cast<Eigen::Index>(m.dim()));
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "dimension mismatch: " << a.dim() << " vs " << b.dim();
    throw Error(ErrorKind::InvalidInput, os.str());
  }
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::NotSkewHermitian: return "NotSkewHermitian";
    case ErrorKind::NotTraceless: return "NotTraceless";
    case ErrorKind::DesignatedNotDiagonal: return "DesignatedNotDiagonal";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{}) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t d = rows.size();
  if (d == 0) throw Error(ErrorKind::InvalidInput, "matrix has no rows");
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    if (rows[r].size() != d) {
      std::ostringstream os;
      os << "row " << r + 1 << " has " << rows[r].size() << " entries, expected " << d;
      throw Error(ErrorKind::InvalidInput, os.str());
    }
    for (std::size_t c = 0; c < d; ++c) {
      const Complex z = rows[r][c];
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        std::ostringstream os;
        os << "entry (" << r + 1 << "," << c + 1 << ") is not finite";
        throw Error(ErrorKind::InvalidInput, os.str());
      }
      m(r, c) = z;
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

double ComplexMatrix::max_abs() const {
  return std::sqrt(simd::active_kernels().max_abs_sq(data_.size(), raw()));
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool ComplexMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) { return z == Complex{}; });
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  ComplexMatrix c(a.dim());
  simd::active_kernels().cgemm(a.dim(), a.raw(), b.raw(), c.raw());
  return c;
}

double skew_defect(const ComplexMatrix& a) {
  double worst = 0.0;
  const std::size_t d = a.dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r; c < d; ++c) worst = std::max(worst, std::abs(a(r, c) + std::conj(a(c, r))));
  return worst;
}

bool is_skew_hermitian(const ComplexMatrix& a, double tau_sym) {
  return skew_defect(a) <= tau_sym * std::max(1.0, a.max_abs());
}

SkewHermitianMatrix::SkewHermitianMatrix(ComplexMatrix inner, double tau_sym) : inner_(std::move(inner)) {
  if (inner_.dim() == 0) throw Error(ErrorKind::InvalidInput, "empty matrix");
  if (!inner_.all_finite()) throw Error(ErrorKind::InvalidInput, "matrix has non-finite entries");
  if (!is_skew_hermitian(inner_, tau_sym)) {
    std::ostringstream os;
    os << "matrix is not skew-Hermitian (max |A + A^dagger| = " << skew_defect(inner_) << ")";
    throw Error(ErrorKind::NotSkewHermitian, os.str());
  }
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t d = a.dim();
  ComplexMatrix ab(d);
  ComplexMatrix ba(d);
  const auto& k = simd::active_kernels();
  k.cgemm(d, a.raw(), b.raw(), ab.raw());
  k.cgemm(d, b.raw(), a.raw(), ba.raw());
  k.axpy(2 * d * d, -1.0, ba.raw(), ab.raw());
  return ab;
}

SkewHermitianMatrix commutator(const SkewHermitianMatrix& a, const SkewHermitianMatrix& b) {
  return SkewHermitianMatrix(commutator(a.matrix(), b.matrix()));
}

double operator_norm(const ComplexMatrix& a) {
  if (a.dim() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(as_eigen(a));
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

ComplexMatrix matrix_exp(const SkewHermitianMatrix& a, double t) {
  const std::size_t d = a.dim();
  // H = -iA is Hermitian; symmetrize away the rounding-level defect.
  Eigen::MatrixXcd h = Complex(0.0, -1.0) * as_eigen(a.matrix());
  h = (0.5 * (h + h.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  Eigen::VectorXcd phases(static_cast<Eigen::Index>(d));
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, t * eig.eigenvalues()(k));
  }
  const Eigen::MatrixXcd u = v * phases.asDiagonal() * v.adjoint();
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      out(r, c) = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

std::vector<double> embed(const ComplexMatrix& a) {
  const std::size_t n = a.dim() * a.dim();
  std::vector<double> v(2 * n);
  const auto e = a.entries();
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = e[i].real();
    v[n + i] = e[i].imag();
  }
  return v;
}

ComplexMatrix unembed(std::span<const double> v, std::size_t dim) {
  const std::size_t n = dim * dim;
  if (v.size() != 2 * n) throw Error(ErrorKind::InvalidInput, "embedded vector has wrong length");
  ComplexMatrix m(dim);
  auto e = m.entries();
  for (std::size_t i = 0; i < n; ++i) e[i] = Complex(v[i], v[n + i]);
  return m;
}

RankResult numerical_rank(std::span<const std::vector<double>> vectors, double tau_rank) {
  if (!(tau_rank > 0.0)) throw Error(ErrorKind::InvalidInput, "tau_rank must be positive");
  RankResult out;
  if (vectors.empty()) return out;
  const std::size_t len = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != len) throw Error(ErrorKind::InvalidInput, "vectors differ in length");
  }
  if (len == 0) return out;

  Eigen::MatrixXd m(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(len));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < len; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vectors[i][j];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  out.singular_values.assign(s.data(), s.data() + s.size());
  if (s.size() == 0 || s(0) == 0.0) return out;

  const double cutoff = tau_rank * s(0);
  for (Eigen::Index k = 0; k < s.size() && s(k) > cutoff; ++k) {
    const auto col = svd.matrixV().col(k);
    out.basis.emplace_back(col.data(), col.data() + col.size());
  }
  out.rank = out.basis.size();
  return out;
}

}  // namespace uqc
