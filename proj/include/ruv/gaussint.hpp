#pragma once

#include <string>

namespace ruv {

/// Exact Gaussian integer. Character sums and MacWilliams checks are done in
/// Z[i]; no floating point anywhere.
struct GaussInt {
    long long re = 0;
    long long im = 0;

    friend constexpr GaussInt operator+(GaussInt a, GaussInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr GaussInt operator-(GaussInt a, GaussInt b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt& operator+=(GaussInt b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    GaussInt& operator*=(GaussInt b) {
        *this = *this * b;
        return *this;
    }
    friend constexpr bool operator==(GaussInt a, GaussInt b) {
        return a.re == b.re && a.im == b.im;
    }
    friend constexpr bool operator!=(GaussInt a, GaussInt b) { return !(a == b); }

    constexpr bool is_real() const { return im == 0; }
};

/// i^k for k >= 0: one of 1, i, -1, -i.
constexpr GaussInt i_pow(unsigned k) {
    switch (k & 3u) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

inline std::string to_string(GaussInt g) {
    std::string s = std::to_string(g.re);
    if (g.im >= 0)
        s += "+" + std::to_string(g.im) + "i";
    else
        s += std::to_string(g.im) + "i";
    return s;
}

}  // namespace ruv
