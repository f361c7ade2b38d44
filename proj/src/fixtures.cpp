#include <map>
#include <stdexcept>

#include "ruv/cyclic.hpp"

namespace ruv {

namespace {

// basic irreducible factors of x^n - 1 over Z4, lowest-degree coefficients first
const std::map<int, std::vector<std::vector<int>>>& factor_data() {
    static const std::map<int, std::vector<std::vector<int>>> data = {
        {3, {{3, 1}, {1, 1, 1}}},
        {5, {{3, 1}, {1, 1, 1, 1, 1}}},
        {7, {{3, 1}, {3, 1, 2, 1}, {3, 2, 3, 1}}},
        {9, {{3, 1}, {1, 1, 1}, {1, 0, 0, 1, 0, 0, 1}}},
        // x^23 - 1 = L1 L2 L3; the degree-11 pair lifts the two binary Golay
        // factors (the x^7 coefficient of L2 is 3)
        {23,
         {{3, 1},
          {3, 1, 0, 0, 2, 3, 3, 3, 0, 3, 2, 1},
          {3, 2, 1, 0, 1, 1, 1, 2, 0, 0, 3, 1}}},
    };
    return data;
}

std::vector<Z4Poly> build_and_verify(int n) {
    const auto it = factor_data().find(n);
    if (it == factor_data().end())
        throw std::invalid_argument("no fixture factorization of x^" + std::to_string(n) + "-1");
    std::vector<Z4Poly> out;
    Z4Poly prod = Z4Poly::one();
    for (const auto& coeffs : it->second) {
        Z4Vec c;
        c.reserve(coeffs.size());
        for (int x : coeffs) c.push_back(Z4(x));
        Z4Poly f{std::move(c)};
        if (!f.is_monic())
            throw std::logic_error("fixture factor is not monic for n=" + std::to_string(n));
        prod = prod * f;
        out.push_back(std::move(f));
    }
    if (prod != Z4Poly::xn_minus_one(n))
        throw std::logic_error("fixture factors do not multiply to x^" + std::to_string(n) + "-1");
    return out;
}

}  // namespace

bool has_xn1_factors(int n) { return factor_data().count(n) != 0; }

const std::vector<Z4Poly>& xn1_factors(int n) {
    static std::map<int, std::vector<Z4Poly>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_and_verify(n)).first;
    return it->second;
}

std::vector<Z4Poly> xn1_divisors(int n) {
    const auto& factors = xn1_factors(n);
    const size_t r = factors.size();
    std::vector<Z4Poly> out;
    out.reserve(size_t{1} << r);
    for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
        Z4Poly d = Z4Poly::one();
        for (size_t i = 0; i < r; ++i)
            if (mask & (size_t{1} << i)) d = d * factors[i];
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace ruv
