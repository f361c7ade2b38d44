#pragma once

#include <cstddef>
#include <cstdint>

// Byte-vector kernels for the inner loops: values live in {0,1,2,3}, one per
// byte. A scalar reference implementation always exists; wider variants are
// selected at runtime and must be bit-identical to the scalar one (the test
// suite enforces equivalence on random buffers).

namespace ruv::kern {

struct Kernels {
    const char* name;
    // dst[i] = (a[i] + b[i]) mod 4; dst may alias a or b
    void (*add_mod4)(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n);
    // dst[i] = (a[i] - b[i]) mod 4
    void (*sub_mod4)(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n);
    // sum of Lee weights (0,1,2,3 -> 0,1,2,1)
    uint64_t (*lee_sum)(const uint8_t* a, size_t n);
    // number of nonzero bytes
    uint64_t (*nonzero_count)(const uint8_t* a, size_t n);
};

const Kernels& scalar();

// null when the build or the CPU lacks the extension
const Kernels* avx2();
const Kernels* neon();

// Runtime selection: widest available variant, unless RUV_FORCE_SCALAR is set
// in the environment.
const Kernels& active();

}  // namespace ruv::kern
