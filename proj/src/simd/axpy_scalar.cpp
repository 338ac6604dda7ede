#include "tc/simd.hpp"

namespace tc::simd {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::uint32_t c, std::uint32_t p, std::size_t n) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = (dst[i] + c * src[i]) % p;
  }
}

void scale_mod(std::uint32_t* dst, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = (c * dst[i]) % p;
}

}  // namespace tc::simd
