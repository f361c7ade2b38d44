#include "ruv/relement.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ruv {

RElement RElement::from_coeff(Z4 a, Z4 b, Z4 c, Z4 d) {
    RElement r;
    r.coeff_ = {a, b, c, d};
    r.crt_ = {a, a + b, a + c, a + b + c + d};
    return r;
}

RElement RElement::from_crt(Z4 r1, Z4 r2, Z4 r3, Z4 r4) {
    // a = r1, b = r2-r1, c = r3-r1, d = r4-r2-r3+r1
    RElement r;
    r.crt_ = {r1, r2, r3, r4};
    r.coeff_ = {r1, r2 - r1, r3 - r1, r4 - r2 - r3 + r1};
    return r;
}

bool RElement::is_zero() const {
    return coeff_[0].is_zero() && coeff_[1].is_zero() && coeff_[2].is_zero() &&
           coeff_[3].is_zero();
}

int RElement::lee_weight() const {
    return crt_[0].lee() + crt_[1].lee() + crt_[2].lee() + crt_[3].lee();
}

RElement operator+(const RElement& x, const RElement& y) {
    return RElement::from_coeff(x.coeff_[0] + y.coeff_[0], x.coeff_[1] + y.coeff_[1],
                                x.coeff_[2] + y.coeff_[2], x.coeff_[3] + y.coeff_[3]);
}

RElement operator-(const RElement& x, const RElement& y) {
    return RElement::from_coeff(x.coeff_[0] - y.coeff_[0], x.coeff_[1] - y.coeff_[1],
                                x.coeff_[2] - y.coeff_[2], x.coeff_[3] - y.coeff_[3]);
}

RElement RElement::operator-() const {
    return from_coeff(-coeff_[0], -coeff_[1], -coeff_[2], -coeff_[3]);
}

RElement mul_via_coefficients(const RElement& x, const RElement& y) {
    const Z4 a1 = x.a(), b1 = x.b(), c1 = x.c(), d1 = x.d();
    const Z4 a2 = y.a(), b2 = y.b(), c2 = y.c(), d2 = y.d();
    // expand (a1+b1 u+c1 v+d1 uv)(a2+b2 u+c2 v+d2 uv) under u^2=u, v^2=v
    const Z4 a = a1 * a2;
    const Z4 b = a1 * b2 + b1 * a2 + b1 * b2;
    const Z4 c = a1 * c2 + c1 * a2 + c1 * c2;
    const Z4 d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2 + b1 * d2 + d1 * b2 +
                 c1 * d2 + d1 * c2 + d1 * d2;
    return RElement::from_coeff(a, b, c, d);
}

RElement operator*(const RElement& x, const RElement& y) {
    RElement r = RElement::from_crt(x.crt_[0] * y.crt_[0], x.crt_[1] * y.crt_[1],
                                    x.crt_[2] * y.crt_[2], x.crt_[3] * y.crt_[3]);
    assert(r == mul_via_coefficients(x, y));
    return r;
}

int RElement::key() const {
    return coeff_[0].value() * 64 + coeff_[1].value() * 16 + coeff_[2].value() * 4 +
           coeff_[3].value();
}

RElement r_zero() { return RElement::from_coeff(0, 0, 0, 0); }
RElement r_one() { return RElement::from_coeff(1, 0, 0, 0); }
RElement r_u() { return RElement::from_coeff(0, 1, 0, 0); }
RElement r_v() { return RElement::from_coeff(0, 0, 1, 0); }
RElement r_uv() { return RElement::from_coeff(0, 0, 0, 1); }

RElement idempotent(int i) {
    switch (i) {
        case 1: return RElement::from_crt(1, 0, 0, 0);  // 1-u-v+uv
        case 2: return RElement::from_crt(0, 1, 0, 0);  // u-uv
        case 3: return RElement::from_crt(0, 0, 1, 0);  // v-uv
        case 4: return RElement::from_crt(0, 0, 0, 1);  // uv
        default: throw std::invalid_argument("idempotent index must be 1..4");
    }
}

namespace {

struct RingTable {
    std::array<RElement, 256> order;
    std::array<int, 256> index_by_key;
    std::array<int, 9> class_sizes{};
    std::array<int, 9> class_offsets{};

    RingTable() {
        std::array<RElement, 256> all;
        int p = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    for (int d = 0; d < 4; ++d)
                        all[static_cast<size_t>(p++)] = RElement::from_coeff(a, b, c, d);
        std::stable_sort(all.begin(), all.end(), [](const RElement& x, const RElement& y) {
            if (x.lee_class() != y.lee_class()) return x.lee_class() < y.lee_class();
            return x.key() < y.key();
        });
        order = all;
        for (int i = 0; i < 256; ++i) {
            index_by_key[static_cast<size_t>(order[static_cast<size_t>(i)].key())] = i;
            class_sizes[static_cast<size_t>(order[static_cast<size_t>(i)].lee_class())]++;
        }
        int off = 0;
        for (int k = 0; k < 9; ++k) {
            class_offsets[static_cast<size_t>(k)] = off;
            off += class_sizes[static_cast<size_t>(k)];
        }
    }
};

const RingTable& table() {
    static const RingTable t;
    return t;
}

}  // namespace

const std::array<RElement, 256>& ring_elements() { return table().order; }

int ring_index(const RElement& x) { return table().index_by_key[static_cast<size_t>(x.key())]; }

const std::array<int, 9>& lee_class_sizes() { return table().class_sizes; }

const std::array<int, 9>& lee_class_offsets() { return table().class_offsets; }

RVector add(const RVector& x, const RVector& y) {
    assert(x.size() == y.size());
    RVector out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

RVector sub(const RVector& x, const RVector& y) {
    assert(x.size() == y.size());
    RVector out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

RElement inner_product(const RVector& x, const RVector& y) {
    assert(x.size() == y.size());
    RElement s = r_zero();
    for (size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
    return s;
}

long long lee_weight(const RVector& v) {
    long long s = 0;
    for (const RElement& x : v) s += x.lee_weight();
    return s;
}

long long hamming_weight(const RVector& v) {
    long long s = 0;
    for (const RElement& x : v) s += !x.is_zero();
    return s;
}

RVector cyclic_shift(const RVector& v) {
    if (v.empty()) return v;
    RVector out(v.size());
    out[0] = v.back();
    for (size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
    return out;
}

bool is_zero(const RVector& v) {
    for (const RElement& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Z4Vec gray_map(const RVector& v) {
    const size_t n = v.size();
    Z4Vec out(4 * n);
    for (size_t j = 0; j < n; ++j) {
        const auto& crt = v[j].crt();
        for (size_t i = 0; i < 4; ++i) out[i * n + j] = crt[i];
    }
    return out;
}

Z4Vec crt_projection(const RVector& v, int i) {
    Z4Vec out(v.size());
    for (size_t j = 0; j < v.size(); ++j) out[j] = v[j].crt()[static_cast<size_t>(i)];
    return out;
}

std::string RElement::to_string() const {
    std::string s;
    auto term = [&s](Z4 c, const char* sym) {
        if (c.is_zero()) return;
        if (!s.empty()) s += "+";
        if (sym[0] == '\0') {
            s += std::to_string(c.value());
        } else {
            if (c != Z4(1)) s += std::to_string(c.value());
            s += sym;
        }
    };
    term(coeff_[0], "");
    term(coeff_[1], "u");
    term(coeff_[2], "v");
    term(coeff_[3], "uv");
    return s.empty() ? "0" : s;
}

std::string RElement::crt_string() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += std::to_string(crt_[static_cast<size_t>(i)].value());
    }
    return s + "]";
}

std::string to_string(const RVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

}  // namespace ruv
