#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "ruv/kernels.hpp"

namespace ruv {

/// One residue of Z4 = Z/4Z. The value is reduced after every operation.
class Z4 {
public:
    constexpr Z4() = default;
    constexpr Z4(int x) : v_(static_cast<uint8_t>(((x % 4) + 4) % 4)) {}

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr bool is_unit() const { return v_ == 1 || v_ == 3; }
    constexpr bool is_even() const { return v_ == 0 || v_ == 2; }

    // 1 and 3 are the only units, each its own inverse
    constexpr Z4 inverse() const {
        assert(is_unit());
        return *this;
    }

    // Lee weight: 0,1,2,3 -> 0,1,2,1
    constexpr int lee() const { return v_ == 3 ? 1 : v_; }

    friend constexpr Z4 operator+(Z4 a, Z4 b) { return Z4((a.v_ + b.v_) & 3); }
    friend constexpr Z4 operator-(Z4 a, Z4 b) { return Z4((a.v_ + 4 - b.v_) & 3); }
    friend constexpr Z4 operator*(Z4 a, Z4 b) { return Z4((a.v_ * b.v_) & 3); }
    constexpr Z4 operator-() const { return Z4((4 - v_) & 3); }
    Z4& operator+=(Z4 b) { v_ = (v_ + b.v_) & 3; return *this; }
    Z4& operator-=(Z4 b) { v_ = (v_ + 4 - b.v_) & 3; return *this; }
    Z4& operator*=(Z4 b) { v_ = (v_ * b.v_) & 3; return *this; }

    friend constexpr bool operator==(Z4 a, Z4 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Z4 a, Z4 b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Z4 a, Z4 b) { return a.v_ < b.v_; }

private:
    uint8_t v_ = 0;
};

static_assert(sizeof(Z4) == 1);

using Z4Vec = std::vector<Z4>;

// Z4Vec is contiguous single-byte storage, so bulk arithmetic can run on raw
// bytes through the kernel table.
inline const uint8_t* bytes(const Z4Vec& v) {
    return reinterpret_cast<const uint8_t*>(v.data());
}
inline uint8_t* bytes(Z4Vec& v) {
    return reinterpret_cast<uint8_t*>(v.data());
}

inline Z4Vec add(const Z4Vec& a, const Z4Vec& b) {
    assert(a.size() == b.size());
    Z4Vec out(a.size());
    kern::active().add_mod4(bytes(out), bytes(a), bytes(b), a.size());
    return out;
}

inline Z4Vec sub(const Z4Vec& a, const Z4Vec& b) {
    assert(a.size() == b.size());
    Z4Vec out(a.size());
    kern::active().sub_mod4(bytes(out), bytes(a), bytes(b), a.size());
    return out;
}

inline void add_in_place(Z4Vec& a, const Z4Vec& b) {
    assert(a.size() == b.size());
    kern::active().add_mod4(bytes(a), bytes(a), bytes(b), a.size());
}

inline Z4Vec negate(const Z4Vec& a) {
    Z4Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

inline Z4Vec scale(const Z4Vec& a, Z4 c) {
    Z4Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

inline int lee_weight(Z4 x) { return x.lee(); }

inline long long lee_weight(const Z4Vec& v) {
    return static_cast<long long>(kern::active().lee_sum(bytes(v), v.size()));
}

inline long long hamming_weight(const Z4Vec& v) {
    return static_cast<long long>(kern::active().nonzero_count(bytes(v), v.size()));
}

inline Z4 inner_product(const Z4Vec& a, const Z4Vec& b) {
    assert(a.size() == b.size());
    Z4 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Right rotation by one position: (c0,...,c_{n-1}) -> (c_{n-1},c0,...,c_{n-2}).
inline Z4Vec cyclic_shift(const Z4Vec& v) {
    if (v.empty()) return v;
    Z4Vec out(v.size());
    out[0] = v.back();
    for (size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
    return out;
}

inline bool is_zero(const Z4Vec& v) {
    for (Z4 x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string to_string(const Z4Vec& v);

}  // namespace ruv
