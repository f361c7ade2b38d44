#include "ruv/mds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ruv {

Rat Rat::of(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rat{num, den};
}

std::string Rat::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

SingletonReport singleton_z4(const Z4Code& c, uint64_t budget) {
    if (c.is_zero())
        throw std::invalid_argument("singleton bound undefined for the zero code");
    SingletonReport rep;
    rep.n = c.length();
    rep.log_card = Rat::of(c.log2_size(), 2);  // log4 |C| = (2k1+k2)/2
    rep.d_hamming = c.min_weights(budget).hamming;
    rep.bound = Rat::of(2LL * rep.n - c.log2_size() + 2, 2);
    rep.mds = 2 * rep.d_hamming == 2LL * rep.n - c.log2_size() + 2;
    return rep;
}

SingletonReport singleton_r(const RCode& c, uint64_t budget) {
    SingletonReport rep;
    rep.n = c.n;
    rep.log_card = Rat::of(c.log2_size(), 8);  // log256 |C| = sum log2|Ci| / 8
    rep.d_hamming = min_distances(c, budget).hamming;
    rep.bound = Rat::of(8LL * rep.n - c.log2_size() + 8, 8);
    rep.mds = 8 * rep.d_hamming == 8LL * rep.n - c.log2_size() + 8;
    return rep;
}

const char* to_string(MdsFamily f) {
    switch (f) {
        case MdsFamily::kNotMds: return "not MDS";
        case MdsFamily::kFullSpace: return "full space";
        case MdsFamily::kRepetition: return "repetition";
        case MdsFamily::kRepetitionDual: return "repetition-dual";
        case MdsFamily::kOutsideFamilies: return "MDS outside the trivial families";
    }
    return "?";
}

namespace {

bool is_repetition_type(const Z4Code& c) {
    if (c.k1() != 1 || c.k2() != 0) return false;
    const Z4Vec& g = c.form().unit_rows.front();
    for (Z4 x : g)
        if (!x.is_unit()) return false;
    return true;
}

}  // namespace

Classification classify_z4_mds(const Z4Code& c, uint64_t budget) {
    Classification out;
    out.report = singleton_z4(c, budget);
    if (!out.report.mds) {
        out.family = MdsFamily::kNotMds;
        return out;
    }
    if (c.k1() == c.length() && c.k2() == 0) {
        out.family = MdsFamily::kFullSpace;
    } else if (is_repetition_type(c)) {
        out.family = MdsFamily::kRepetition;
    } else if (c.log2_size() == 2 * c.length() - 2 && is_repetition_type(c.dual())) {
        out.family = MdsFamily::kRepetitionDual;
    } else {
        out.family = MdsFamily::kOutsideFamilies;
    }
    return out;
}

std::vector<Z4Code> all_z4_codes(int n) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("exhaustive code enumeration limited to n <= 3");
    std::vector<Z4Code> out;
    std::set<std::vector<uint8_t>> seen;
    const int cells = n * n;
    uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= 4;
    for (uint64_t m = 0; m < total; ++m) {
        uint64_t t = m;
        std::vector<Z4Vec> rows(static_cast<size_t>(n), Z4Vec(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(t & 3);
                t >>= 2;
            }
        Z4Code code(n, std::move(rows));
        std::vector<uint8_t> key;
        code.for_each_codeword([&key](const Z4Vec& w) {
            for (Z4 x : w) key.push_back(static_cast<uint8_t>(x.value()));
        });
        // keys are comparable only if sorted per codeword list; enumeration
        // order depends on the generators, so sort codeword blocks
        std::vector<std::vector<uint8_t>> words;
        for (size_t i = 0; i < key.size(); i += static_cast<size_t>(n))
            words.emplace_back(key.begin() + static_cast<long>(i),
                               key.begin() + static_cast<long>(i + static_cast<size_t>(n)));
        std::sort(words.begin(), words.end());
        std::vector<uint8_t> canon;
        for (const auto& w : words) canon.insert(canon.end(), w.begin(), w.end());
        if (seen.insert(std::move(canon)).second) out.push_back(std::move(code));
    }
    return out;
}

namespace {

struct CompStats {
    int log2 = 0;       // 2k1+k2
    long long dh = 0;   // min Hamming weight
    bool mds = false;
    std::string text;
};

CompStats stats_of(const Z4Code& c, uint64_t budget) {
    CompStats s;
    s.log2 = c.log2_size();
    const auto rep = singleton_z4(c, budget);
    s.dh = rep.d_hamming;
    s.mds = rep.mds;
    std::ostringstream os;
    os << "(n=" << c.length() << ", 4^" << c.k1() << "2^" << c.k2() << ", dH=" << s.dh
       << (s.mds ? ", MDS" : "") << ")";
    s.text = os.str();
    return s;
}

std::vector<Z4Code> directed_pool(int n, uint64_t budget) {
    std::vector<Z4Code> pool;
    pool.push_back(Z4Code::full(n));
    pool.push_back(Z4Code::repetition(n));
    pool.push_back(Z4Code::repetition(n).dual());
    pool.push_back(Z4Code(n, {Z4Vec(static_cast<size_t>(n), Z4(2))}));
    pool.push_back(Z4Code::diagonal_two(n));
    {
        Z4Vec e1(static_cast<size_t>(n), Z4(0));
        e1[0] = 1;
        pool.push_back(Z4Code(n, {e1}));
    }
    if (n >= 2) {
        Z4Vec w(static_cast<size_t>(n), Z4(0));
        w[0] = 1;
        w[1] = 1;
        pool.push_back(Z4Code(n, {w}));
    }
    {
        // repetition with a sign pattern, to exercise the orbit reading
        Z4Vec w(static_cast<size_t>(n), Z4(1));
        w[0] = 3;
        pool.push_back(Z4Code(n, {w}));
    }
    // deterministic random matrices
    std::mt19937_64 rng(0x5eedULL + static_cast<uint64_t>(n));
    for (int t = 0; t < 8; ++t) {
        const int rows = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n));
        std::vector<Z4Vec> gens;
        for (int i = 0; i < rows; ++i) {
            Z4Vec r(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) r[static_cast<size_t>(j)] = static_cast<int>(rng() & 3);
            gens.push_back(std::move(r));
        }
        Z4Code c(n, std::move(gens));
        if (!c.is_zero()) pool.push_back(std::move(c));
    }
    (void)budget;
    return pool;
}

}  // namespace

bool Section6Report::clean() const {
    for (const TheoremCheck& c : checks)
        if (!c.counterexamples.empty()) return false;
    return lemma16.counterexamples.empty();
}

Section6Report verify_section6(int max_n, uint64_t budget) {
    if (max_n < 1 || max_n > 4)
        throw std::invalid_argument("section-6 sweep limited to max_n in 1..4");

    Section6Report rep;
    rep.max_n = max_n;
    TheoremCheck l17d1{"lemma17: MDS with dH=1 forces (n,4^n,1) components", 0, {}};
    TheoremCheck l17d2{"lemma17: MDS with dH=2 forces (n,4^(n-1),2) components", 0, {}};
    TheoremCheck t18{"theorem18: MDS implies at least one MDS component", 0, {}};
    TheoremCheck t19{"theorem19: MDS with three MDS components forces the fourth, same parameters", 0, {}};
    TheoremCheck t20{"theorem20: MDS with two MDS components forces all, same parameters", 0, {}};
    TheoremCheck t21{"theorem21: MDS with an (n,4,n) component forces (n,4,n) everywhere", 0, {}};
    TheoremCheck t22f{"theorem22 forward: MDS implies all components MDS with equal parameters", 0, {}};
    TheoremCheck t22b{"theorem22 converse: equal-parameter MDS components imply MDS", 0, {}};

    for (int n = 1; n <= max_n; ++n) {
        std::vector<Z4Code> pool;
        if (n <= 2) {
            for (Z4Code& c : all_z4_codes(n))
                if (!c.is_zero()) pool.push_back(std::move(c));
        } else {
            pool = directed_pool(n, budget);
        }
        std::vector<CompStats> stats;
        stats.reserve(pool.size());
        for (const Z4Code& c : pool) stats.push_back(stats_of(c, budget));

        const size_t m = pool.size();
        for (size_t i1 = 0; i1 < m; ++i1)
            for (size_t i2 = 0; i2 < m; ++i2)
                for (size_t i3 = 0; i3 < m; ++i3)
                    for (size_t i4 = 0; i4 < m; ++i4) {
                        const CompStats* cs[4] = {&stats[i1], &stats[i2], &stats[i3], &stats[i4]};
                        const int sum_log2 = cs[0]->log2 + cs[1]->log2 + cs[2]->log2 + cs[3]->log2;
                        const long long dh =
                            std::min(std::min(cs[0]->dh, cs[1]->dh), std::min(cs[2]->dh, cs[3]->dh));
                        const bool mds = 8 * dh == 8LL * n - sum_log2 + 8;
                        int mds_comps = 0;
                        bool same_params = true;
                        for (int i = 0; i < 4; ++i) {
                            mds_comps += cs[i]->mds;
                            same_params = same_params && cs[i]->log2 == cs[0]->log2 &&
                                          cs[i]->dh == cs[0]->dh;
                        }
                        auto describe = [&] {
                            std::ostringstream os;
                            os << "n=" << n << " components " << cs[0]->text << cs[1]->text
                               << cs[2]->text << cs[3]->text;
                            return os.str();
                        };

                        if (mds && dh == 1) {
                            l17d1.cases++;
                            bool ok = true;
                            for (int i = 0; i < 4; ++i)
                                ok = ok && cs[i]->mds && cs[i]->log2 == 2 * n && cs[i]->dh == 1;
                            if (!ok) l17d1.counterexamples.push_back(describe());
                        }
                        if (mds && dh == 2) {
                            l17d2.cases++;
                            bool ok = true;
                            for (int i = 0; i < 4; ++i)
                                ok = ok && cs[i]->mds && cs[i]->log2 == 2 * (n - 1) && cs[i]->dh == 2;
                            if (!ok) l17d2.counterexamples.push_back(describe());
                        }
                        if (mds) {
                            t18.cases++;
                            if (mds_comps == 0) t18.counterexamples.push_back(describe());
                        }
                        if (mds && mds_comps >= 3) {
                            t19.cases++;
                            if (!(mds_comps == 4 && same_params))
                                t19.counterexamples.push_back(describe());
                        }
                        if (mds && mds_comps >= 2) {
                            t20.cases++;
                            if (!(mds_comps == 4 && same_params))
                                t20.counterexamples.push_back(describe());
                        }
                        if (mds) {
                            bool has_rep_params = false;
                            for (int i = 0; i < 4; ++i)
                                has_rep_params = has_rep_params ||
                                                 (cs[i]->mds && cs[i]->log2 == 2 && cs[i]->dh == n);
                            if (has_rep_params) {
                                t21.cases++;
                                bool ok = true;
                                for (int i = 0; i < 4; ++i)
                                    ok = ok && cs[i]->mds && cs[i]->log2 == 2 && cs[i]->dh == n;
                                if (!ok) t21.counterexamples.push_back(describe());
                            }
                        }
                        if (mds) {
                            t22f.cases++;
                            if (!(mds_comps == 4 && same_params))
                                t22f.counterexamples.push_back(describe());
                        }
                        if (mds_comps == 4 && same_params) {
                            t22b.cases++;
                            if (!mds) t22b.counterexamples.push_back(describe());
                        }
                    }
    }

    rep.checks = {l17d1, l17d2, t18, t19, t20, t21, t22f, t22b};

    // trivial-MDS classification, exhaustive up to length 3
    rep.lemma16.max_len = std::min(3, std::max(3, max_n));
    for (int n = 1; n <= rep.lemma16.max_len; ++n) {
        for (const Z4Code& c : all_z4_codes(n)) {
            if (c.is_zero()) continue;
            rep.lemma16.codes++;
            const Classification cls = classify_z4_mds(c, budget);
            if (!cls.report.mds) continue;
            rep.lemma16.mds_codes++;
            switch (cls.family) {
                case MdsFamily::kFullSpace: rep.lemma16.family_counts[0]++; break;
                case MdsFamily::kRepetition: rep.lemma16.family_counts[1]++; break;
                case MdsFamily::kRepetitionDual: rep.lemma16.family_counts[2]++; break;
                default: {
                    std::ostringstream os;
                    os << "n=" << n << " 4^" << c.k1() << "2^" << c.k2()
                       << " dH=" << cls.report.d_hamming << " outside the trivial families";
                    rep.lemma16.counterexamples.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

std::string Section6Report::to_text() const {
    std::ostringstream os;
    for (const TheoremCheck& c : checks) {
        os << c.name << ": " << c.cases << " applicable cases, "
           << c.counterexamples.size() << " counterexamples\n";
        for (const std::string& s : c.counterexamples) os << "  " << s << "\n";
    }
    os << "trivial-MDS classification up to length " << lemma16.max_len << ": "
       << lemma16.codes << " codes, " << lemma16.mds_codes << " MDS ("
       << lemma16.family_counts[0] << " full space, " << lemma16.family_counts[1]
       << " repetition, " << lemma16.family_counts[2] << " repetition-dual), "
       << lemma16.counterexamples.size() << " outside\n";
    for (const std::string& s : lemma16.counterexamples) os << "  " << s << "\n";
    return os.str();
}

}  // namespace ruv
