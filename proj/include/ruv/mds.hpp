#pragma once

#include <array>
#include <string>
#include <vector>

#include "ruv/rcode.hpp"
#include "ruv/z4code.hpp"

namespace ruv {

/// Exact rational, for Singleton-bound arithmetic. log4 of a 4^k1 2^k2 code
/// is k1 + k2/2 exactly; no floating point enters any comparison.
struct Rat {
    long long num = 0;
    long long den = 1;
    static Rat of(long long num, long long den);
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    std::string to_string() const;
};

struct SingletonReport {
    int n = 0;
    Rat log_card;  // log4 |C| over Z4; log256 |C| over R
    long long d_hamming = 0;
    Rat bound;  // n - log_card + 1
    bool mds = false;
};

SingletonReport singleton_z4(const Z4Code& c, uint64_t budget = kDefaultBudget);
SingletonReport singleton_r(const RCode& c, uint64_t budget = kDefaultBudget);

/// The trivial MDS families over Z4, each taken as the orbit of the named
/// code under coordinatewise unit scaling (the all-ones generator of the
/// repetition code may carry any unit pattern).
enum class MdsFamily {
    kNotMds,
    kFullSpace,
    kRepetition,
    kRepetitionDual,
    kOutsideFamilies,  // an MDS code matching none of the three: a finding
};
const char* to_string(MdsFamily f);

struct Classification {
    SingletonReport report;
    MdsFamily family = MdsFamily::kNotMds;
};

Classification classify_z4_mds(const Z4Code& c, uint64_t budget = kDefaultBudget);

/// Every Z4-linear code of length n (n <= 3), reached by enumerating all
/// n-row generator matrices and deduplicating by codeword set. Includes the
/// zero code.
std::vector<Z4Code> all_z4_codes(int n);

struct TheoremCheck {
    std::string name;
    long long cases = 0;
    std::vector<std::string> counterexamples;
};

struct Lemma16Check {
    int max_len = 0;
    long long codes = 0;
    long long mds_codes = 0;
    std::array<long long, 3> family_counts{};  // full space, repetition, repetition dual
    std::vector<std::string> counterexamples;
};

struct Section6Report {
    int max_n = 0;
    std::vector<TheoremCheck> checks;
    Lemma16Check lemma16;
    bool clean() const;
    std::string to_text() const;
};

/// Structure checks on R-codes assembled from component pools: exhaustive
/// over all nonzero component quadruples for n <= 2, directed families for
/// n in {3, 4}. The trivial-MDS classification is verified exhaustively for
/// all lengths up to 3 regardless of max_n.
Section6Report verify_section6(int max_n, uint64_t budget = kDefaultBudget);

}  // namespace ruv
