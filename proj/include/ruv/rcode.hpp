#pragma once

#include <array>
#include <vector>

#include "ruv/relement.hpp"
#include "ruv/z4code.hpp"

namespace ruv {

/// A linear code over R as the ordered quadruple of its CRT component codes:
/// C = e1*C1 + e2*C2 + e3*C3 + e4*C4, |C| = |C1||C2||C3||C4|. The
/// decomposition is unique, so the quadruple is the canonical representation.
struct RCode {
    int n;
    std::array<Z4Code, 4> comp;

    int log2_size() const {
        return comp[0].log2_size() + comp[1].log2_size() + comp[2].log2_size() +
               comp[3].log2_size();
    }
};

RCode build_rcode(const Z4Code& c1, const Z4Code& c2, const Z4Code& c3, const Z4Code& c4);

/// Component decomposition of the R-span of the given generator vectors:
/// the i-th component is the i-th CRT coordinate projection of the span.
RCode decompose_rcode(int n, const std::vector<RVector>& generators);

/// Stacked generator rows e_i * G_i of the component generators.
std::vector<RVector> stacked_generators(const RCode& c);

/// Componentwise dual; equals the inner-product dual over R^n.
RCode dual(const RCode& c);

/// Gray image: a Z4 code of length 4n generated by diag(G1, G2, G3, G4).
/// Cardinality is preserved.
Z4Code gray_image(const RCode& c);

bool is_self_orthogonal(const RCode& c);
bool is_self_dual(const RCode& c);

bool contains(const RCode& c, const RVector& v);

struct RWeights {
    long long lee = 0;
    long long hamming = 0;
};

/// Minimum Lee and Hamming distances, taken as the minimum over the nonzero
/// components. Throws std::invalid_argument for the zero code.
RWeights min_distances(const RCode& c, uint64_t budget = kDefaultBudget, int threads = 1);

CodeParams params(const RCode& c, uint64_t budget = kDefaultBudget, int threads = 1);

/// Visits every codeword of C exactly once (product order over components).
template <class F>
void for_each_codeword(const RCode& c, F&& f, uint64_t budget = kDefaultBudget) {
    if (c.log2_size() > 62 || (uint64_t{1} << c.log2_size()) > budget)
        throw budget_error(c.log2_size(), budget);
    const size_t n = static_cast<size_t>(c.n);
    std::array<std::vector<Z4Vec>, 4> words;
    for (int i = 0; i < 4; ++i) words[static_cast<size_t>(i)] = c.comp[static_cast<size_t>(i)].codewords(budget);
    RVector w(n, r_zero());
    for (const Z4Vec& a : words[0])
        for (const Z4Vec& b : words[1])
            for (const Z4Vec& d : words[2])
                for (const Z4Vec& e : words[3]) {
                    for (size_t j = 0; j < n; ++j)
                        w[j] = RElement::from_crt(a[j], b[j], d[j], e[j]);
                    f(const_cast<const RVector&>(w));
                }
}

std::vector<RVector> codewords(const RCode& c, uint64_t budget = kDefaultBudget);

/// Exhaustive dual over R^n by scanning all 256^n vectors against the
/// stacked generators; the independent oracle for the componentwise dual.
/// Restricted to n <= 2.
std::vector<RVector> exhaustive_dual_codewords(const RCode& c);

/// All 256^n vectors of R^n in a fixed order (n <= 2).
std::vector<RVector> all_rvectors(int n);

}  // namespace ruv
