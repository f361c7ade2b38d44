#include "ruv/kernels.hpp"

namespace ruv::kern {

namespace {

void add_mod4_scalar(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = (a[i] + b[i]) & 3u;
}

void sub_mod4_scalar(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = (a[i] + 4u - b[i]) & 3u;
}

uint64_t lee_sum_scalar(const uint8_t* a, size_t n) {
    static constexpr uint8_t kLee[4] = {0, 1, 2, 1};
    uint64_t s = 0;
    for (size_t i = 0; i < n; ++i) s += kLee[a[i] & 3u];
    return s;
}

uint64_t nonzero_count_scalar(const uint8_t* a, size_t n) {
    uint64_t s = 0;
    for (size_t i = 0; i < n; ++i) s += a[i] != 0;
    return s;
}

}  // namespace

const Kernels& scalar() {
    static const Kernels k{"scalar", add_mod4_scalar, sub_mod4_scalar,
                           lee_sum_scalar, nonzero_count_scalar};
    return k;
}

}  // namespace ruv::kern
