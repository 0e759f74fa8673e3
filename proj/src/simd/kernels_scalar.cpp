#include "kernels_impl.hpp"

namespace uqc::simd::detail {

void cgemm_scalar(std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < 2 * n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = c + 2 * i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[2 * (i * n + k)];
      const double ai = a[2 * (i * n + k) + 1];
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = b + 2 * k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

double dot_scalar(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(std::size_t n, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs_sq_scalar(std::size_t n, const double* z) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = z[2 * i] * z[2 * i] + z[2 * i + 1] * z[2 * i + 1];
    if (v > m) m = v;
  }
  return m;
}

}  // namespace uqc::simd::detail
