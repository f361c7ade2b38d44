#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruv/relement.hpp"
#include "ruv/z4poly.hpp"

namespace ruv {

/// Polynomial with coefficients in R, lowest degree first, canonical form
/// without trailing zeros.
class RPoly {
public:
    RPoly() = default;
    explicit RPoly(RVector coeffs_low_first);
    static RPoly from_z4(const Z4Poly& p);
    static RPoly constant(const RElement& c);

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const;
    RElement coeff(int i) const;
    const RVector& coeffs() const { return c_; }

    /// CRT coordinate projection: a Z4 polynomial, for i in 0..3.
    Z4Poly project(int i) const;

    /// Coefficient vector of length n with exponents folded modulo x^n - 1.
    RVector coeffs_mod_xn(int n) const;

    friend RPoly operator+(const RPoly& a, const RPoly& b);
    friend RPoly operator-(const RPoly& a, const RPoly& b);
    friend RPoly operator*(const RPoly& a, const RPoly& b);
    friend bool operator==(const RPoly& a, const RPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    RVector c_;
};

/// Assemble the R polynomial whose CRT projections are the four given Z4
/// polynomials (coefficientwise CRT lift).
RPoly crt_combine(const Z4Poly& p1, const Z4Poly& p2, const Z4Poly& p3, const Z4Poly& p4);

}  // namespace ruv
