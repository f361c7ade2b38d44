#include "ruv/rcode.hpp"

#include <stdexcept>

namespace ruv {

RCode build_rcode(const Z4Code& c1, const Z4Code& c2, const Z4Code& c3, const Z4Code& c4) {
    const int n = c1.length();
    if (c2.length() != n || c3.length() != n || c4.length() != n)
        throw std::invalid_argument("component length mismatch");
    return RCode{n, {c1, c2, c3, c4}};
}

RCode decompose_rcode(int n, const std::vector<RVector>& generators) {
    std::array<std::vector<Z4Vec>, 4> rows;
    for (const RVector& g : generators) {
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("generator length mismatch");
        for (int i = 0; i < 4; ++i) rows[static_cast<size_t>(i)].push_back(crt_projection(g, i));
    }
    return RCode{n,
                 {Z4Code(n, rows[0]), Z4Code(n, rows[1]), Z4Code(n, rows[2]),
                  Z4Code(n, rows[3])}};
}

std::vector<RVector> stacked_generators(const RCode& c) {
    std::vector<RVector> out;
    for (int i = 0; i < 4; ++i) {
        for (const Z4Vec& row : c.comp[static_cast<size_t>(i)].reduced_generators()) {
            RVector r(static_cast<size_t>(c.n), r_zero());
            for (size_t j = 0; j < r.size(); ++j) {
                Z4 crt[4] = {0, 0, 0, 0};
                crt[i] = row[j];
                r[j] = RElement::from_crt(crt[0], crt[1], crt[2], crt[3]);
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

RCode dual(const RCode& c) {
    return RCode{c.n,
                 {c.comp[0].dual(), c.comp[1].dual(), c.comp[2].dual(), c.comp[3].dual()}};
}

Z4Code gray_image(const RCode& c) {
    const int n = c.n;
    std::vector<Z4Vec> rows;
    for (int i = 0; i < 4; ++i) {
        for (const Z4Vec& g : c.comp[static_cast<size_t>(i)].reduced_generators()) {
            Z4Vec row(static_cast<size_t>(4 * n), Z4(0));
            for (int j = 0; j < n; ++j)
                row[static_cast<size_t>(i * n + j)] = g[static_cast<size_t>(j)];
            rows.push_back(std::move(row));
        }
    }
    return Z4Code(4 * n, std::move(rows));
}

namespace {

bool self_orthogonal_z4(const Z4Code& c) {
    const auto gens = c.reduced_generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            if (!inner_product(gens[i], gens[j]).is_zero()) return false;
    return true;
}

}  // namespace

bool is_self_orthogonal(const RCode& c) {
    for (const Z4Code& comp : c.comp)
        if (!self_orthogonal_z4(comp)) return false;
    return true;
}

bool is_self_dual(const RCode& c) {
    for (const Z4Code& comp : c.comp)
        if (!(self_orthogonal_z4(comp) && comp.log2_size() == comp.length())) return false;
    return true;
}

bool contains(const RCode& c, const RVector& v) {
    if (static_cast<int>(v.size()) != c.n) return false;
    for (int i = 0; i < 4; ++i)
        if (!c.comp[static_cast<size_t>(i)].contains(crt_projection(v, i))) return false;
    return true;
}

RWeights min_distances(const RCode& c, uint64_t budget, int threads) {
    RWeights out{-1, -1};
    for (const Z4Code& comp : c.comp) {
        if (comp.is_zero()) continue;
        auto w = comp.min_weights(budget, threads);
        if (out.lee < 0 || w.lee < out.lee) out.lee = w.lee;
        if (out.hamming < 0 || w.hamming < out.hamming) out.hamming = w.hamming;
    }
    if (out.lee < 0)
        throw std::invalid_argument("minimum distance undefined for the zero code");
    return out;
}

CodeParams params(const RCode& c, uint64_t budget, int threads) {
    RWeights w = min_distances(c, budget, threads);
    int k1 = 0, k2 = 0;
    for (const Z4Code& comp : c.comp) {
        k1 += comp.k1();
        k2 += comp.k2();
    }
    return CodeParams{c.n, k1, k2, w.lee, w.hamming};
}

std::vector<RVector> codewords(const RCode& c, uint64_t budget) {
    std::vector<RVector> out;
    for_each_codeword(c, [&out](const RVector& w) { out.push_back(w); }, budget);
    return out;
}

std::vector<RVector> all_rvectors(int n) {
    if (n < 1 || n > 2) throw std::invalid_argument("exhaustive scan limited to n <= 2");
    const auto& ring = ring_elements();
    std::vector<RVector> out;
    if (n == 1) {
        out.reserve(256);
        for (const RElement& x : ring) out.push_back(RVector{x});
    } else {
        out.reserve(65536);
        for (const RElement& x : ring)
            for (const RElement& y : ring) out.push_back(RVector{x, y});
    }
    return out;
}

std::vector<RVector> exhaustive_dual_codewords(const RCode& c) {
    const auto gens = stacked_generators(c);
    std::vector<RVector> out;
    for (const RVector& v : all_rvectors(c.n)) {
        bool ok = true;
        for (const RVector& g : gens) {
            if (!inner_product(v, g).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(v);
    }
    return out;
}

}  // namespace ruv
