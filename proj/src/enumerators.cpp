#include "ruv/enumerators.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace ruv {

namespace {

using I128 = __int128;

long long to_ll_checked(I128 v, const char* what) {
    if (v > I128(0x7fffffffffffffffLL) || v < -I128(0x7fffffffffffffffLL))
        throw std::overflow_error(std::string(what) + ": coefficient exceeds 64 bits");
    return static_cast<long long>(v);
}

}  // namespace

long long Clwe::total() const {
    long long t = 0;
    for (const auto& [k, c] : terms) t += c;
    return t;
}

std::array<uint16_t, 256> Clwe::dense(const Composition& key) {
    std::array<uint16_t, 256> out{};
    for (auto [idx, cnt] : key) out[idx] = cnt;
    return out;
}

namespace {

Composition composition_of(const RVector& w) {
    std::array<uint16_t, 256> counts{};
    for (const RElement& x : w) counts[static_cast<size_t>(ring_index(x))]++;
    Composition key;
    for (int i = 0; i < 256; ++i)
        if (counts[static_cast<size_t>(i)])
            key.emplace_back(static_cast<uint8_t>(i), counts[static_cast<size_t>(i)]);
    return key;
}

SlweKey class_counts_of(const RVector& w) {
    SlweKey key{};
    for (const RElement& x : w) key[static_cast<size_t>(x.lee_class())]++;
    return key;
}

}  // namespace

Clwe clwe_of(const std::vector<RVector>& words) {
    Clwe e;
    e.n = words.empty() ? 0 : static_cast<int>(words.front().size());
    for (const RVector& w : words) e.terms[composition_of(w)]++;
    return e;
}

Clwe clwe_of(const RCode& c, uint64_t budget) {
    Clwe e;
    e.n = c.n;
    for_each_codeword(c, [&e](const RVector& w) { e.terms[composition_of(w)]++; }, budget);
    return e;
}

long long Slwe::eval_at_ones() const {
    long long t = 0;
    for (const auto& [k, c] : terms) t += c;
    return t;
}

Slwe symmetrize(const Clwe& e) {
    Slwe s;
    s.n = e.n;
    const auto& ring = ring_elements();
    for (const auto& [comp, coeff] : e.terms) {
        SlweKey key{};
        for (auto [idx, cnt] : comp)
            key[static_cast<size_t>(ring[idx].lee_class())] += cnt;
        s.terms[key] += coeff;
    }
    return s;
}

Slwe slwe_of(const std::vector<RVector>& words) {
    Slwe s;
    s.n = words.empty() ? 0 : static_cast<int>(words.front().size());
    for (const RVector& w : words) s.terms[class_counts_of(w)]++;
    return s;
}

Slwe slwe_of(const RCode& c, uint64_t budget) {
    Slwe s;
    s.n = c.n;
    for_each_codeword(c, [&s](const RVector& w) { s.terms[class_counts_of(w)]++; }, budget);
    return s;
}

long long LeePoly::eval_at_ones() const {
    long long t = 0;
    for (long long c : coef) t += c;
    return t;
}

LeePoly lee_of(const Slwe& e) {
    LeePoly out;
    out.n = e.n;
    out.coef.assign(static_cast<size_t>(8 * e.n) + 1, 0);
    for (const auto& [key, coeff] : e.terms) {
        long long w = 0;
        for (int i = 0; i < 9; ++i) w += static_cast<long long>(i) * key[static_cast<size_t>(i)];
        out.coef[static_cast<size_t>(w)] += coeff;
    }
    return out;
}

LeePoly lee_of(const std::vector<RVector>& words, int n) {
    LeePoly out;
    out.n = n;
    out.coef.assign(static_cast<size_t>(8 * n) + 1, 0);
    for (const RVector& w : words) out.coef[static_cast<size_t>(lee_weight(w))]++;
    return out;
}

LeePoly lee_of(const RCode& c, uint64_t budget) {
    LeePoly out;
    out.n = c.n;
    out.coef.assign(static_cast<size_t>(8 * c.n) + 1, 0);
    for_each_codeword(
        c, [&out](const RVector& w) { out.coef[static_cast<size_t>(lee_weight(w))]++; },
        budget);
    return out;
}

const CharacterSumTable& character_sum_table() {
    static const CharacterSumTable table = [] {
        CharacterSumTable t;
        const auto& ring = ring_elements();
        std::array<bool, 9> seen{};
        for (const RElement& a : ring) {
            std::array<GaussInt, 9> row{};
            for (const RElement& r : ring) row[static_cast<size_t>(r.lee_class())] += (a * r).chi();
            const int k = a.lee_class();
            for (int j = 0; j < 9; ++j) {
                const GaussInt v = row[static_cast<size_t>(j)];
                if (!v.is_real())
                    throw std::runtime_error("character sums must be rational integers; got " +
                                             to_string(v) + " for a=" + a.to_string());
                if (!seen[static_cast<size_t>(k)]) {
                    t.s[static_cast<size_t>(k)][static_cast<size_t>(j)] = v.re;
                } else if (t.s[static_cast<size_t>(k)][static_cast<size_t>(j)] != v.re) {
                    throw std::runtime_error(
                        "class sum is not constant on class D" + std::to_string(k) +
                        ": counterexample a=" + a.to_string());
                }
            }
            seen[static_cast<size_t>(k)] = true;
        }
        return t;
    }();
    return table;
}

namespace {

using Poly9 = std::map<SlweKey, I128>;

Poly9 poly9_mul(const Poly9& a, const Poly9& b) {
    Poly9 out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            SlweKey k{};
            for (int i = 0; i < 9; ++i) k[static_cast<size_t>(i)] = ka[static_cast<size_t>(i)] + kb[static_cast<size_t>(i)];
            out[k] += ca * cb;
        }
    return out;
}

}  // namespace

Slwe macwilliams_slwe(const Slwe& e, long long code_size) {
    if (code_size <= 0) throw std::invalid_argument("code size must be positive");
    const CharacterSumTable& tab = character_sum_table();

    // B_k as a degree-1 polynomial in the 9 class variables
    std::array<Poly9, 9> linear;
    for (int k = 0; k < 9; ++k)
        for (int j = 0; j < 9; ++j) {
            SlweKey key{};
            key[static_cast<size_t>(j)] = 1;
            if (tab.s[static_cast<size_t>(k)][static_cast<size_t>(j)] != 0)
                linear[static_cast<size_t>(k)][key] = tab.s[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }

    // cache of B_k^m
    std::array<std::vector<Poly9>, 9> powers;
    for (int k = 0; k < 9; ++k) {
        Poly9 one;
        one[SlweKey{}] = 1;
        powers[static_cast<size_t>(k)].push_back(std::move(one));
    }
    auto power = [&](int k, int m) -> const Poly9& {
        auto& cache = powers[static_cast<size_t>(k)];
        while (static_cast<int>(cache.size()) <= m)
            cache.push_back(poly9_mul(cache.back(), linear[static_cast<size_t>(k)]));
        return cache[static_cast<size_t>(m)];
    };

    Poly9 acc;
    for (const auto& [key, coeff] : e.terms) {
        Poly9 prod;
        prod[SlweKey{}] = coeff;
        for (int k = 0; k < 9; ++k)
            if (key[static_cast<size_t>(k)] > 0)
                prod = poly9_mul(prod, power(k, key[static_cast<size_t>(k)]));
        for (const auto& [k2, c2] : prod) acc[k2] += c2;
    }

    Slwe out;
    out.n = e.n;
    for (const auto& [key, coeff] : acc) {
        if (coeff % code_size != 0)
            throw std::runtime_error("macwilliams_slwe: non-integral coefficient after division");
        const long long v = to_ll_checked(coeff / code_size, "macwilliams_slwe");
        if (v != 0) out.terms[key] = v;
    }
    return out;
}

LeePoly macwilliams_lee(const LeePoly& a, long long code_size) {
    if (code_size <= 0) throw std::invalid_argument("code size must be positive");
    const int deg = 8 * a.n;
    if (static_cast<int>(a.coef.size()) != deg + 1)
        throw std::invalid_argument("macwilliams_lee: enumerator must be homogeneous of degree 8n");

    // binomial table up to deg
    std::vector<std::vector<I128>> binom(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
        binom[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    auto C = [&](int nn, int kk) -> I128 {
        if (kk < 0 || kk > nn) return 0;
        return binom[static_cast<size_t>(nn)][static_cast<size_t>(kk)];
    };

    // x -> x+y, y -> x-y: coefficient of y^j in (x+y)^(deg-i) (x-y)^i
    std::vector<I128> acc(static_cast<size_t>(deg) + 1, 0);
    for (int i = 0; i <= deg; ++i) {
        const long long ai = a.coef[static_cast<size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; j <= deg; ++j) {
            I128 conv = 0;
            for (int k = std::max(0, j - (deg - i)); k <= std::min(i, j); ++k) {
                const I128 term = C(deg - i, j - k) * C(i, k);
                conv += (k & 1) ? -term : term;
            }
            acc[static_cast<size_t>(j)] += I128(ai) * conv;
        }
    }

    LeePoly out;
    out.n = a.n;
    out.coef.assign(static_cast<size_t>(deg) + 1, 0);
    for (int j = 0; j <= deg; ++j) {
        if (acc[static_cast<size_t>(j)] % code_size != 0)
            throw std::runtime_error("macwilliams_lee: non-integral coefficient after division");
        out.coef[static_cast<size_t>(j)] =
            to_ll_checked(acc[static_cast<size_t>(j)] / code_size, "macwilliams_lee");
    }
    return out;
}

namespace {

// Deterministic evaluation points for the 256-variable identity: five small
// integer assignments and three Gaussian-integer assignments.
GaussInt eval_point(int t, int k) {
    if (t < 5) return GaussInt{((k + 1) * (t + 2)) % 7 - 3, 0};
    return GaussInt{k % 3 - 1, (k / 3 + t) % 3 - 1};
}

// chi(x*y) as a power of i, tabulated over element keys once
const std::array<std::array<uint8_t, 256>, 256>& chi_exp_table() {
    static const auto tab = [] {
        auto t = std::make_unique<std::array<std::array<uint8_t, 256>, 256>>();
        std::array<RElement, 256> by_key;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    for (int d = 0; d < 4; ++d) {
                        RElement e = RElement::from_coeff(a, b, c, d);
                        by_key[static_cast<size_t>(e.key())] = e;
                    }
        for (int i = 0; i < 256; ++i)
            for (int j = 0; j < 256; ++j)
                (*t)[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<uint8_t>(
                    (by_key[static_cast<size_t>(i)] * by_key[static_cast<size_t>(j)]).d().value());
        return t;
    }();
    return *tab;
}

// chi of the inner product of two vectors, via the tabulated exponents
GaussInt chi_inner(const RVector& x, const RVector& y) {
    const auto& tab = chi_exp_table();
    unsigned e = 0;
    for (size_t j = 0; j < x.size(); ++j)
        e += tab[static_cast<size_t>(x[j].key())][static_cast<size_t>(y[j].key())];
    return i_pow(e);
}

}  // namespace

VerifyResult verify_clwe_macwilliams(const RCode& c) {
    if (c.n > 2) return {false, "clwe verification limited to n <= 2"};
    const auto words = codewords(c);
    const auto dual_words = exhaustive_dual_codewords(c);
    const long long size = static_cast<long long>(words.size());
    const auto& ring = ring_elements();

    for (int t = 0; t < 8; ++t) {
        std::array<GaussInt, 256> val;
        for (int k = 0; k < 256; ++k) val[static_cast<size_t>(k)] = eval_point(t, k);

        // S_r = sum_k chi(r * a_k) val_k, one per ring element
        const auto& tab = chi_exp_table();
        std::array<GaussInt, 256> s{};
        for (int r = 0; r < 256; ++r) {
            const int rkey = ring[static_cast<size_t>(r)].key();
            GaussInt acc{0, 0};
            for (int k = 0; k < 256; ++k)
                acc += i_pow(tab[static_cast<size_t>(rkey)][static_cast<size_t>(
                           ring[static_cast<size_t>(k)].key())]) *
                       val[static_cast<size_t>(k)];
            s[static_cast<size_t>(rkey)] = acc;
        }

        GaussInt lhs{0, 0};
        for (const RVector& d : dual_words) {
            GaussInt prod{1, 0};
            for (const RElement& x : d) prod *= val[static_cast<size_t>(ring_index(x))];
            lhs += prod;
        }
        GaussInt rhs{0, 0};
        for (const RVector& w : words) {
            GaussInt prod{1, 0};
            for (const RElement& x : w) prod *= s[static_cast<size_t>(x.key())];
            rhs += prod;
        }
        if (rhs.re % size != 0 || rhs.im % size != 0)
            return {false, "transform sum not divisible by |C| at point " + std::to_string(t)};
        rhs = {rhs.re / size, rhs.im / size};
        if (!(lhs == rhs))
            return {false, "mismatch at point " + std::to_string(t) + ": dual side " +
                               to_string(lhs) + ", transform side " + to_string(rhs)};
    }
    return {true, "8 evaluation points matched"};
}

VerifyResult hadamard_check(const RCode& c, const TestFunction& f) {
    if (c.n > 2) return {false, "hadamard check limited to n <= 2"};
    const auto words = codewords(c);
    const auto dual_words = exhaustive_dual_codewords(c);
    const auto space = all_rvectors(c.n);
    const long long size = static_cast<long long>(words.size());

    std::vector<GaussInt> fv(space.size());
    for (size_t i = 0; i < space.size(); ++i) fv[i] = f(space[i]);

    GaussInt lhs{0, 0};
    for (const RVector& d : dual_words) lhs += f(d);

    I128 rhs_re = 0, rhs_im = 0;
    for (const RVector& w : words) {
        GaussInt fhat{0, 0};
        for (size_t i = 0; i < space.size(); ++i) fhat += chi_inner(w, space[i]) * fv[i];
        rhs_re += fhat.re;
        rhs_im += fhat.im;
    }
    if (rhs_re % size != 0 || rhs_im % size != 0)
        return {false, "hadamard sum not divisible by |C|"};
    GaussInt rhs{to_ll_checked(rhs_re / size, "hadamard"), to_ll_checked(rhs_im / size, "hadamard")};
    if (!(lhs == rhs))
        return {false, "identity violated: dual sum " + to_string(lhs) + ", transform sum " +
                           to_string(rhs)};
    return {true, "identity holds"};
}

std::vector<std::pair<std::string, TestFunction>> standard_test_functions(int n) {
    std::vector<std::pair<std::string, TestFunction>> fns;
    fns.emplace_back("one", [](const RVector&) { return GaussInt{1, 0}; });
    fns.emplace_back("zero_indicator",
                     [](const RVector& v) { return GaussInt{is_zero(v) ? 1 : 0, 0}; });
    (void)n;
    fns.emplace_back("lee_monomial_x1_y2", [](const RVector& v) {
        long long w = lee_weight(v);
        long long val = 1;
        for (long long i = 0; i < w; ++i) val *= 2;
        return GaussInt{val, 0};
    });
    fns.emplace_back("uv_first_symbol_indicator", [](const RVector& v) {
        return GaussInt{(!v.empty() && v[0] == r_uv()) ? 1 : 0, 0};
    });
    return fns;
}

}  // namespace ruv
