// NEON variants of the byte kernels, for aarch64 builds.

#include "ruv/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace ruv::kern {

namespace {

void add_mod4_neon(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    const uint8x16_t mask = vdupq_n_u8(3);
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t s = vandq_u8(vaddq_u8(vld1q_u8(a + i), vld1q_u8(b + i)), mask);
        vst1q_u8(dst + i, s);
    }
    for (; i < n; ++i) dst[i] = (a[i] + b[i]) & 3u;
}

void sub_mod4_neon(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    const uint8x16_t mask = vdupq_n_u8(3);
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t s = vandq_u8(vsubq_u8(vld1q_u8(a + i), vld1q_u8(b + i)), mask);
        vst1q_u8(dst + i, s);
    }
    for (; i < n; ++i) dst[i] = (a[i] + 4u - b[i]) & 3u;
}

uint64_t lee_sum_neon(const uint8_t* a, size_t n) {
    static const uint8_t kTable[16] = {0, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    const uint8x16_t table = vld1q_u8(kTable);
    uint64_t s = 0;
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t w = vqtbl1q_u8(table, vld1q_u8(a + i));
        s += vaddlvq_u8(w);
    }
    static constexpr uint8_t kLee[4] = {0, 1, 2, 1};
    for (; i < n; ++i) s += kLee[a[i] & 3u];
    return s;
}

uint64_t nonzero_count_neon(const uint8_t* a, size_t n) {
    const uint8x16_t zero = vdupq_n_u8(0);
    const uint8x16_t one = vdupq_n_u8(1);
    uint64_t s = 0;
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t nz = vbicq_u8(one, vceqq_u8(vld1q_u8(a + i), zero));
        s += vaddlvq_u8(nz);
    }
    for (; i < n; ++i) s += a[i] != 0;
    return s;
}

}  // namespace

const Kernels* neon_impl() {
    static const Kernels k{"neon", add_mod4_neon, sub_mod4_neon,
                           lee_sum_neon, nonzero_count_neon};
    return &k;
}

}  // namespace ruv::kern

#endif  // aarch64 NEON
