#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ruv/z4.hpp"

namespace ruv {

/// Polynomial over Z4, coefficients stored lowest degree first. Canonical
/// form never has a trailing zero coefficient; the zero polynomial is the
/// empty sequence and its degree is "minus infinity" (an empty optional),
/// never an ordinary integer.
class Z4Poly {
public:
    Z4Poly() = default;
    Z4Poly(std::initializer_list<int> coeffs_low_first);
    explicit Z4Poly(Z4Vec coeffs_low_first);

    static Z4Poly zero() { return {}; }
    static Z4Poly one() { return Z4Poly{1}; }
    static Z4Poly x_pow(int k);
    /// x^n - 1
    static Z4Poly xn_minus_one(int n);

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const;
    Z4 coeff(int i) const;
    Z4 leading() const;
    Z4 constant_term() const { return coeff(0); }
    bool is_monic() const { return !c_.empty() && leading() == Z4(1); }
    const Z4Vec& coeffs() const { return c_; }

    /// Coefficient vector of length n with exponents folded modulo x^n - 1.
    Z4Vec coeffs_mod_xn(int n) const;

    Z4 eval(Z4 x) const;

    friend Z4Poly operator+(const Z4Poly& a, const Z4Poly& b);
    friend Z4Poly operator-(const Z4Poly& a, const Z4Poly& b);
    friend Z4Poly operator*(const Z4Poly& a, const Z4Poly& b);
    friend Z4Poly operator*(Z4 c, const Z4Poly& a);
    friend bool operator==(const Z4Poly& a, const Z4Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Z4Poly& a, const Z4Poly& b) { return a.c_ != b.c_; }

    std::string to_string() const;

private:
    void trim();
    Z4Vec c_;
};

/// Product reduced modulo x^n - 1.
Z4Poly mul_mod(const Z4Poly& a, const Z4Poly& b, int n);

/// Euclidean division a = q*d + r with deg r < deg d. The divisor must be
/// monic: Z4 is not a field and division by non-units is not defined.
std::pair<Z4Poly, Z4Poly> divmod(const Z4Poly& a, const Z4Poly& d);

/// True when g divides f exactly (g monic).
bool divides(const Z4Poly& g, const Z4Poly& f);

/// Reciprocal polynomial x^deg(f) * f(1/x): the reversed coefficient
/// sequence. Rejects the zero polynomial.
Z4Poly reciprocal(const Z4Poly& f);

}  // namespace ruv
