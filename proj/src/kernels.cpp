#include "ruv/kernels.hpp"

#include <cstdlib>

namespace ruv::kern {

// defined in the per-ISA translation units when those are part of the build
#if defined(RUV_HAVE_AVX2_BUILD)
const Kernels* avx2_impl();
#endif
#if defined(RUV_HAVE_NEON_BUILD)
const Kernels* neon_impl();
#endif

const Kernels* avx2() {
#if defined(RUV_HAVE_AVX2_BUILD)
#if defined(__GNUC__) || defined(__clang__)
    if (__builtin_cpu_supports("avx2")) return avx2_impl();
    return nullptr;
#else
    return avx2_impl();
#endif
#else
    return nullptr;
#endif
}

const Kernels* neon() {
#if defined(RUV_HAVE_NEON_BUILD)
    return neon_impl();
#else
    return nullptr;
#endif
}

const Kernels& active() {
    static const Kernels* selected = [] {
        if (std::getenv("RUV_FORCE_SCALAR") != nullptr) return &scalar();
        if (const Kernels* k = avx2()) return k;
        if (const Kernels* k = neon()) return k;
        return &scalar();
    }();
    return *selected;
}

}  // namespace ruv::kern
