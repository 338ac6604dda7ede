#include <immintrin.h>

#include "tc/simd.hpp"

namespace tc::simd {

namespace {

// High 32 bits of the 32x32 product, lane-wise.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

}  // namespace

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t c, std::uint32_t p, std::size_t n) {
  if (c == 0) return;
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_factor(p)));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    __m256i q = mulhi_epu32(t, vm);
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
    // r < 2p; subtract p once where r > p - 1 (values stay below 2^17, signed compare is safe)
    __m256i over = _mm256_cmpgt_epi32(r, pm1);
    r = _mm256_sub_epi32(r, _mm256_and_si256(over, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

}  // namespace tc::simd
