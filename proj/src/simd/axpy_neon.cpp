#include <arm_neon.h>

#include "tc/simd.hpp"

namespace tc::simd {

void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t c, std::uint32_t p, std::size_t n) {
  if (c == 0) return;
  const uint32x4_t vc = vdupq_n_u32(c);
  const uint32x4_t vp = vdupq_n_u32(p);
  const uint32x2_t vm = vdup_n_u32(barrett_factor(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t t = vmlaq_u32(vld1q_u32(dst + i), vld1q_u32(src + i), vc);
    uint64x2_t lo = vmull_u32(vget_low_u32(t), vm);
    uint64x2_t hi = vmull_u32(vget_high_u32(t), vm);
    uint32x4_t q = vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
    uint32x4_t r = vmlsq_u32(t, q, vp);
    r = vsubq_u32(r, vandq_u32(vcgeq_u32(r, vp), vp));
    vst1q_u32(dst + i, r);
  }
  for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

}  // namespace tc::simd
