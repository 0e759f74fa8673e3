// Compiled with -mavx2 -mfma. Only reached through the dispatch table after a
// CPUID check, so nothing here may be inlined into portable code: keep this
// file free of standard-library templates.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace uqc::simd::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void cgemm_avx2(std::size_t n, const double* a, const double* b, double* c) {
  const std::size_t row = 2 * n;
  const std::size_t vec_end = row & ~std::size_t{3};  // whole pairs of complex
  for (std::size_t i = 0; i < 2 * n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = c + i * row;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * row + 2 * k];
      const double ai = a[i * row + 2 * k + 1];
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = b + k * row;
      const __m256d vr = _mm256_set1_pd(ar);
      const __m256d vi = _mm256_set1_pd(ai);
      std::size_t j = 0;
      for (; j < vec_end; j += 4) {
        const __m256d bv = _mm256_loadu_pd(brow + j);
        const __m256d bs = _mm256_permute_pd(bv, 0x5);  // (im, re) per complex
        // even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br
        const __m256d prod = _mm256_fmaddsub_pd(vr, bv, _mm256_mul_pd(vi, bs));
        _mm256_storeu_pd(crow + j, _mm256_add_pd(_mm256_loadu_pd(crow + j), prod));
      }
      for (; j < row; j += 2) {
        const double br = brow[j];
        const double bi = brow[j + 1];
        crow[j] += ar * br - ai * bi;
        crow[j + 1] += ar * bi + ai * br;
      }
    }
  }
}

double dot_avx2(std::size_t n, const double* x, const double* y) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(std::size_t n, double alpha, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs_sq_avx2(std::size_t n, const double* z) {
  __m256d best = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d v = _mm256_loadu_pd(z + 2 * k);
    const __m256d sq = _mm256_mul_pd(v, v);
    // (re^2 + im^2) lands in both lanes of each complex
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  const __m128d lo = _mm256_castpd256_pd128(best);
  const __m128d hi = _mm256_extractf128_pd(best, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  double out = _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
  for (; k < n; ++k) {
    const double v = z[2 * k] * z[2 * k] + z[2 * k + 1] * z[2 * k + 1];
    if (v > out) out = v;
  }
  return out;
}

}  // namespace uqc::simd::detail
