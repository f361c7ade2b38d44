#include "ruv/z4poly.hpp"

#include <stdexcept>

namespace ruv {

Z4Poly::Z4Poly(std::initializer_list<int> coeffs_low_first) {
    c_.reserve(coeffs_low_first.size());
    for (int x : coeffs_low_first) c_.push_back(Z4(x));
    trim();
}

Z4Poly::Z4Poly(Z4Vec coeffs_low_first) : c_(std::move(coeffs_low_first)) { trim(); }

void Z4Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Z4Poly Z4Poly::x_pow(int k) {
    Z4Vec c(static_cast<size_t>(k) + 1, Z4(0));
    c.back() = 1;
    return Z4Poly(std::move(c));
}

Z4Poly Z4Poly::xn_minus_one(int n) {
    Z4Vec c(static_cast<size_t>(n) + 1, Z4(0));
    c[0] = -Z4(1);
    c.back() = 1;
    return Z4Poly(std::move(c));
}

std::optional<int> Z4Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Z4 Z4Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Z4(0);
    return c_[static_cast<size_t>(i)];
}

Z4 Z4Poly::leading() const { return c_.empty() ? Z4(0) : c_.back(); }

Z4Vec Z4Poly::coeffs_mod_xn(int n) const {
    Z4Vec out(static_cast<size_t>(n), Z4(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i % static_cast<size_t>(n)] += c_[i];
    return out;
}

Z4 Z4Poly::eval(Z4 x) const {
    Z4 acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Z4Poly operator+(const Z4Poly& a, const Z4Poly& b) {
    Z4Vec c(std::max(a.c_.size(), b.c_.size()), Z4(0));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Z4Poly(std::move(c));
}

Z4Poly operator-(const Z4Poly& a, const Z4Poly& b) {
    Z4Vec c(std::max(a.c_.size(), b.c_.size()), Z4(0));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Z4Poly(std::move(c));
}

Z4Poly operator*(const Z4Poly& a, const Z4Poly& b) {
    if (a.is_zero() || b.is_zero()) return Z4Poly::zero();
    Z4Vec c(a.c_.size() + b.c_.size() - 1, Z4(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Z4Poly(std::move(c));
}

Z4Poly operator*(Z4 c, const Z4Poly& a) {
    Z4Vec out = a.c_;
    for (Z4& x : out) x *= c;
    return Z4Poly(std::move(out));
}

Z4Poly mul_mod(const Z4Poly& a, const Z4Poly& b, int n) {
    if (n < 1) throw std::invalid_argument("mul_mod: n must be positive");
    Z4Vec c(static_cast<size_t>(n), Z4(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[(i + j) % static_cast<size_t>(n)] += a.coeffs()[i] * b.coeffs()[j];
    return Z4Poly(std::move(c));
}

std::pair<Z4Poly, Z4Poly> divmod(const Z4Poly& a, const Z4Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    if (!d.is_monic()) throw std::invalid_argument("divmod: divisor must be monic");
    Z4Vec rem = a.coeffs();
    const int dd = *d.degree();
    Z4Vec q;
    if (static_cast<int>(rem.size()) - 1 >= dd)
        q.assign(rem.size() - static_cast<size_t>(dd), Z4(0));
    // classic long division; leading coefficient of d is 1
    int top = static_cast<int>(rem.size()) - 1;
    while (top >= dd) {
        while (top >= 0 && rem[static_cast<size_t>(top)].is_zero()) --top;
        if (top < dd) break;
        Z4 c = rem[static_cast<size_t>(top)];
        int k = top - dd;
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k + i)] -= c * d.coeff(i);
    }
    return {Z4Poly(std::move(q)), Z4Poly(std::move(rem))};
}

bool divides(const Z4Poly& g, const Z4Poly& f) {
    if (f.is_zero()) return true;
    if (g.is_zero()) return false;
    return divmod(f, g).second.is_zero();
}

Z4Poly reciprocal(const Z4Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("reciprocal: zero polynomial");
    Z4Vec c(f.coeffs().rbegin(), f.coeffs().rend());
    return Z4Poly(std::move(c));
}

std::string Z4Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        Z4 c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c.value());
        } else {
            if (c != Z4(1)) s += std::to_string(c.value());
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::string to_string(const Z4Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i].value());
    }
    s += ")";
    return s;
}

}  // namespace ruv
