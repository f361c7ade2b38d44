#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ruv/gaussint.hpp"
#include "ruv/z4.hpp"

namespace ruv {

/// One element of the 256-element ring R = Z4 + uZ4 + vZ4 + uvZ4 with
/// u^2 = u, v^2 = v, uv = vu. Both representations are kept at all times:
///
///   coefficient form  r = a + ub + vc + uvd
///   CRT form          r = r1*e1 + r2*e2 + r3*e3 + r4*e4
///
/// with r1 = a, r2 = a+b, r3 = a+c, r4 = a+b+c+d. e1..e4 are the pairwise
/// orthogonal idempotents summing to 1, so multiplication is componentwise in
/// CRT form.
class RElement {
public:
    RElement() = default;

    static RElement from_coeff(Z4 a, Z4 b, Z4 c, Z4 d);
    static RElement from_crt(Z4 r1, Z4 r2, Z4 r3, Z4 r4);
    static RElement scalar(Z4 a) { return from_coeff(a, 0, 0, 0); }

    Z4 a() const { return coeff_[0]; }
    Z4 b() const { return coeff_[1]; }
    Z4 c() const { return coeff_[2]; }
    Z4 d() const { return coeff_[3]; }
    const std::array<Z4, 4>& coeffs() const { return coeff_; }
    const std::array<Z4, 4>& crt() const { return crt_; }

    bool is_zero() const;

    /// Gray image of the symbol: its CRT coordinate vector.
    std::array<Z4, 4> gray() const { return crt_; }

    /// Sum of the Lee weights of the CRT coordinates; range 0..8.
    int lee_weight() const;
    /// The D-class index of the element equals its Lee weight.
    int lee_class() const { return lee_weight(); }

    /// Additive character chi(a + ub + vc + uvd) = i^d.
    GaussInt chi() const { return i_pow(static_cast<unsigned>(coeff_[3].value())); }

    friend RElement operator+(const RElement& x, const RElement& y);
    friend RElement operator-(const RElement& x, const RElement& y);
    RElement operator-() const;
    /// CRT-componentwise product (cross-checked against the coefficient-form
    /// expansion in debug builds).
    friend RElement operator*(const RElement& x, const RElement& y);
    friend bool operator==(const RElement& x, const RElement& y) {
        return x.coeff_ == y.coeff_;
    }
    friend bool operator!=(const RElement& x, const RElement& y) { return !(x == y); }

    /// Packed (a,b,c,d) in base 4; 0..255.
    int key() const;

    /// "a+bu+cv+duv" with zero terms dropped; "[r1,r2,r3,r4]" via crt_string.
    std::string to_string() const;
    std::string crt_string() const;

private:
    std::array<Z4, 4> coeff_{};  // a, b, c, d
    std::array<Z4, 4> crt_{};    // r1, r2, r3, r4
};

/// Reference multiplication by direct expansion under u^2=u, v^2=v, uv=vu.
/// Kept as the independent route the exhaustive multiplication oracle checks.
RElement mul_via_coefficients(const RElement& x, const RElement& y);

RElement r_zero();
RElement r_one();
RElement r_u();
RElement r_v();
RElement r_uv();
/// e1..e4 for i in 1..4.
RElement idempotent(int i);

/// All 256 elements in the canonical order: ascending Lee class, then
/// ascending lexicographic (a,b,c,d) within a class. This pins the variable
/// indexing of the complete weight enumerator.
const std::array<RElement, 256>& ring_elements();
/// Position of x in the canonical order (0-based).
int ring_index(const RElement& x);
/// Sizes of the Lee classes D0..D8: (1,8,28,56,70,56,28,8,1).
const std::array<int, 9>& lee_class_sizes();
/// First canonical index of each class (class i occupies [offset[i],
/// offset[i]+size[i])).
const std::array<int, 9>& lee_class_offsets();

using RVector = std::vector<RElement>;

RVector add(const RVector& x, const RVector& y);
RVector sub(const RVector& x, const RVector& y);
RElement inner_product(const RVector& x, const RVector& y);
long long lee_weight(const RVector& v);
/// Number of nonzero R symbols.
long long hamming_weight(const RVector& v);
RVector cyclic_shift(const RVector& v);
bool is_zero(const RVector& v);

/// Gray map on vectors: length-4n Z4 vector, grouped by CRT coordinate
/// (all first coordinates, then all second coordinates, ...).
Z4Vec gray_map(const RVector& v);

/// CRT coordinate projection: the Z4 vector of i-th coordinates (i in 0..3).
Z4Vec crt_projection(const RVector& v, int i);

std::string to_string(const RVector& v);

}  // namespace ruv
