#pragma once

#include <cstddef>

namespace uqc::simd::detail {

void cgemm_scalar(std::size_t n, const double* a, const double* b, double* c);
double dot_scalar(std::size_t n, const double* x, const double* y);
void axpy_scalar(std::size_t n, double alpha, const double* x, double* y);
double max_abs_sq_scalar(std::size_t n, const double* z);

#if defined(UQC_HAVE_AVX2_KERNELS)
void cgemm_avx2(std::size_t n, const double* a, const double* b, double* c);
double dot_avx2(std::size_t n, const double* x, const double* y);
void axpy_avx2(std::size_t n, double alpha, const double* x, double* y);
double max_abs_sq_avx2(std::size_t n, const double* z);
#endif

}  // namespace uqc::simd::detail
