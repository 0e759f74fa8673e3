#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"
#include "uqc/simd/kernels.hpp"

namespace uqc::simd {

namespace {

constexpr KernelTable kReference{
    "scalar",
    detail::cgemm_scalar,
    detail::dot_scalar,
    detail::axpy_scalar,
    detail::max_abs_sq_scalar,
};

#if defined(UQC_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{
    "avx2",
    detail::cgemm_avx2,
    detail::dot_avx2,
    detail::axpy_avx2,
    detail::max_abs_sq_avx2,
};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& select() {
  if (const char* forced = std::getenv("UQC_SIMD")) {
    if (std::string_view(forced) == "scalar") return kReference;
  }
  if (const KernelTable* t = avx2_kernels()) return *t;
  return kReference;
}

}  // namespace

const KernelTable& reference_kernels() { return kReference; }

const KernelTable* avx2_kernels() {
#if defined(UQC_HAVE_AVX2_KERNELS)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace uqc::simd
