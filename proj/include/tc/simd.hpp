#pragma once
// Row kernels for dense elimination over prime fields.
//
// Every kernel computes dst[i] = (dst[i] + c * src[i]) mod p for residues in
// [0, p) with p < 2^16, so c * src[i] + dst[i] < 2^32 and 32-bit lanes suffice.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace tc::simd {

using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src,
                        std::uint32_t c, std::uint32_t p, std::size_t n);

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::uint32_t c, std::uint32_t p, std::size_t n);
#if defined(TC_HAVE_AVX2)
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t c, std::uint32_t p, std::size_t n);
#endif
#if defined(TC_HAVE_NEON)
void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t c, std::uint32_t p, std::size_t n);
#endif

// Scales a row in place: dst[i] = c * dst[i] mod p.
void scale_mod(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n);

enum class Isa { scalar, avx2, neon };

// Best kernel for the running CPU. TC_SIMD=scalar in the environment forces
// the reference kernel.
Isa active_isa();
AxpyFn axpy_kernel();
AxpyFn axpy_kernel_for(Isa isa);
std::string_view isa_name(Isa isa);

// Barrett constant floor(2^32 / p), shared by the vector kernels.
inline std::uint32_t barrett_factor(std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
}

}  // namespace tc::simd
