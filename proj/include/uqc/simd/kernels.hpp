#pragma once

// Data-parallel inner loops used by the matrix algebra and the closure oracle.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2+FMA
// variant. The variant is chosen once at first use from CPUID; setting
// UQC_SIMD=scalar in the environment forces the reference path.
//
// Complex data is interleaved (re, im) doubles, i.e. the layout of
// std::complex<double>[n]. Matrices are n x n, row-major.

#include <cstddef>

namespace uqc::simd {

struct KernelTable {
  const char* name;
  // c = a * b for n x n complex matrices. c must not alias a or b.
  void (*cgemm)(std::size_t n, const double* a, const double* b, double* c);
  // Real dot product of length n.
  double (*dot)(std::size_t n, const double* x, const double* y);
  // y += alpha * x, real, length n.
  void (*axpy)(std::size_t n, double alpha, const double* x, double* y);
  // max_k |z_k|^2 over n complex values; 0 for n == 0.
  double (*max_abs_sq)(std::size_t n, const double* z);
};

const KernelTable& reference_kernels();

// nullptr when the build has no AVX2 kernels or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

// The table selected for this process.
const KernelTable& active_kernels();

}  // namespace uqc::simd
