#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ruv/gaussint.hpp"
#include "ruv/rcode.hpp"

namespace ruv {

/// Sparse symbol composition of a codeword: (canonical ring index, count)
/// pairs sorted by index; counts sum to the code length.
using Composition = std::vector<std::pair<uint8_t, uint16_t>>;

/// Complete Lee weight enumerator: multiset of symbol compositions. One
/// variable per ring element, indexed canonically.
struct Clwe {
    int n = 0;
    std::map<Composition, long long> terms;
    long long total() const;
    /// Dense 256-entry view of one key.
    static std::array<uint16_t, 256> dense(const Composition& key);
};

Clwe clwe_of(const std::vector<RVector>& words);
Clwe clwe_of(const RCode& c, uint64_t budget = kDefaultBudget);

/// Exponent tuple of the 9 class variables (x,y,z,w,p,s,t,l,m); sums to n.
using SlweKey = std::array<uint16_t, 9>;

/// Symmetrized Lee weight enumerator: one variable per Lee class D0..D8.
struct Slwe {
    int n = 0;
    std::map<SlweKey, long long> terms;
    long long eval_at_ones() const;
};

/// Merge the 256 clwe variables into 9 by Lee class.
Slwe symmetrize(const Clwe& e);
Slwe slwe_of(const RCode& c, uint64_t budget = kDefaultBudget);
Slwe slwe_of(const std::vector<RVector>& words);

/// Two-variable Lee enumerator: coef[i] counts codewords of Lee weight i,
/// i = 0..8n.
struct LeePoly {
    int n = 0;
    std::vector<long long> coef;
    long long eval_at_ones() const;
};

/// Substitute class variable i by x^(8-i) y^i.
LeePoly lee_of(const Slwe& e);
/// Direct Lee-weight histogram of the code; the independent route.
LeePoly lee_of(const RCode& c, uint64_t budget = kDefaultBudget);
LeePoly lee_of(const std::vector<RVector>& words, int n);

/// S[k][j] = sum over r in D_j of chi(a*r), for a in D_k. Computed by brute
/// force over all 256 elements; construction fails if the sum depends on the
/// choice of a within D_k or is not a rational integer (either would break
/// the 9-variable MacWilliams identity).
struct CharacterSumTable {
    std::array<std::array<long long, 9>, 9> s{};
};
const CharacterSumTable& character_sum_table();

/// 9-variable MacWilliams transform: substitute class variable k by the
/// linear form with coefficients S[k][*], expand exactly, divide by the code
/// size. Throws if the division is not exact.
Slwe macwilliams_slwe(const Slwe& e, long long code_size);

/// Two-variable MacWilliams transform: (1/|C|) Lee_C(x+y, x-y), exact.
LeePoly macwilliams_lee(const LeePoly& a, long long code_size);

struct VerifyResult {
    bool ok = true;
    std::string detail;
};

/// Checks the 256-variable MacWilliams identity by exact multi-point
/// evaluation (deterministic integer and Gaussian-integer points; the
/// 256-variable polynomials are never expanded). n <= 2.
VerifyResult verify_clwe_macwilliams(const RCode& c);

using TestFunction = std::function<GaussInt(const RVector&)>;

/// Poisson-summation check: sum of f over the dual equals 1/|C| times the sum
/// of the Hadamard transform of f over the code. n <= 2.
VerifyResult hadamard_check(const RCode& c, const TestFunction& f);

/// Named integer-valued test functions for hadamard_check.
std::vector<std::pair<std::string, TestFunction>> standard_test_functions(int n);

}  // namespace ruv
