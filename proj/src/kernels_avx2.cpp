// AVX2 variants of the byte kernels. Compiled only on x86-64; selected at
// runtime when the CPU reports AVX2.

#include "ruv/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace ruv::kern {

namespace {

void add_mod4_avx2(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    const __m256i mask = _mm256_set1_epi8(3);
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = _mm256_and_si256(_mm256_add_epi8(x, y), mask);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
    }
    for (; i < n; ++i) dst[i] = (a[i] + b[i]) & 3u;
}

void sub_mod4_avx2(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    const __m256i mask = _mm256_set1_epi8(3);
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = _mm256_and_si256(_mm256_sub_epi8(x, y), mask);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
    }
    for (; i < n; ++i) dst[i] = (a[i] + 4u - b[i]) & 3u;
}

uint64_t lee_sum_avx2(const uint8_t* a, size_t n) {
    // per-byte table lookup 0,1,2,1 via pshufb, then horizontal sums of the
    // weight bytes with psadbw
    const __m256i table = _mm256_setr_epi8(0, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                           0, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0);
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i w = _mm256_shuffle_epi8(table, x);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(w, zero));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    static constexpr uint8_t kLee[4] = {0, 1, 2, 1};
    for (; i < n; ++i) s += kLee[a[i] & 3u];
    return s;
}

uint64_t nonzero_count_avx2(const uint8_t* a, size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi8(1);
    __m256i acc = zero;
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        // 1 for each nonzero byte
        __m256i nz = _mm256_andnot_si256(_mm256_cmpeq_epi8(x, zero), one);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(nz, zero));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += a[i] != 0;
    return s;
}

}  // namespace

const Kernels* avx2_impl() {
    static const Kernels k{"avx2", add_mod4_avx2, sub_mod4_avx2,
                           lee_sum_avx2, nonzero_count_avx2};
    return &k;
}

}  // namespace ruv::kern

#endif  // __AVX2__
