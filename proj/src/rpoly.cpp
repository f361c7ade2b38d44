#include "ruv/rpoly.hpp"

#include <algorithm>

namespace ruv {

RPoly::RPoly(RVector coeffs_low_first) : c_(std::move(coeffs_low_first)) { trim(); }

void RPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RPoly RPoly::from_z4(const Z4Poly& p) {
    RVector c;
    c.reserve(p.coeffs().size());
    for (Z4 x : p.coeffs()) c.push_back(RElement::scalar(x));
    return RPoly(std::move(c));
}

RPoly RPoly::constant(const RElement& c) { return RPoly(RVector{c}); }

std::optional<int> RPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

RElement RPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return r_zero();
    return c_[static_cast<size_t>(i)];
}

Z4Poly RPoly::project(int i) const {
    Z4Vec out(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) out[j] = c_[j].crt()[static_cast<size_t>(i)];
    return Z4Poly(std::move(out));
}

RVector RPoly::coeffs_mod_xn(int n) const {
    RVector out(static_cast<size_t>(n), r_zero());
    for (size_t i = 0; i < c_.size(); ++i)
        out[i % static_cast<size_t>(n)] = out[i % static_cast<size_t>(n)] + c_[i];
    return out;
}

RPoly operator+(const RPoly& a, const RPoly& b) {
    RVector c(std::max(a.c_.size(), b.c_.size()), r_zero());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return RPoly(std::move(c));
}

RPoly operator-(const RPoly& a, const RPoly& b) {
    RVector c(std::max(a.c_.size(), b.c_.size()), r_zero());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return RPoly(std::move(c));
}

RPoly operator*(const RPoly& a, const RPoly& b) {
    if (a.is_zero() || b.is_zero()) return RPoly{};
    RVector c(a.c_.size() + b.c_.size() - 1, r_zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return RPoly(std::move(c));
}

RPoly crt_combine(const Z4Poly& p1, const Z4Poly& p2, const Z4Poly& p3, const Z4Poly& p4) {
    size_t len = 0;
    for (const Z4Poly* p : {&p1, &p2, &p3, &p4}) len = std::max(len, p->coeffs().size());
    RVector c(len, r_zero());
    for (size_t i = 0; i < len; ++i)
        c[i] = RElement::from_crt(p1.coeff(static_cast<int>(i)), p2.coeff(static_cast<int>(i)),
                                  p3.coeff(static_cast<int>(i)), p4.coeff(static_cast<int>(i)));
    return RPoly(std::move(c));
}

std::string RPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const RElement& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += "(" + c.to_string() + ")";
        } else {
            s += "(" + c.to_string() + ")x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace ruv
