#include <cstdlib>
#include <cstring>

#include "tc/simd.hpp"

namespace tc::simd {

namespace {

Isa detect() {
  if (const char* forced = std::getenv("TC_SIMD"); forced && std::strcmp(forced, "scalar") == 0) {
    return Isa::scalar;
  }
#if defined(TC_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
#if defined(TC_HAVE_NEON)
  return Isa::neon;
#endif
  return Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

AxpyFn axpy_kernel_for(Isa isa) {
  switch (isa) {
#if defined(TC_HAVE_AVX2)
    case Isa::avx2:
      return axpy_mod_avx2;
#endif
#if defined(TC_HAVE_NEON)
    case Isa::neon:
      return axpy_mod_neon;
#endif
    default:
      return axpy_mod_scalar;
  }
}

AxpyFn axpy_kernel() {
  static const AxpyFn fn = axpy_kernel_for(active_isa());
  return fn;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
    default:
      return "scalar";
  }
}

}  // namespace tc::simd
