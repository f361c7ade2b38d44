#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruv/z4.hpp"

namespace ruv {

inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 25;

/// Thrown when an enumeration would exceed the configured budget; carries the
/// exact cardinality that was computed from the standard form.
class budget_error : public std::runtime_error {
public:
    budget_error(int log2_size, uint64_t budget);
    int log2_size;  // |C| = 2^log2_size
};

/// Standard-form data of a Z4-linear code: unit pivots first (k1 rows), then
/// pivots equal to 2 on the remaining columns (k2 rows). Rows are kept in the
/// original coordinates; the recorded pivot columns define the permutation
/// that exhibits the block shape
///
///   ( I_k1   A     B  )
///   ( 0    2 I_k2  2C )
struct StandardForm {
    int n = 0;
    int k1 = 0;
    int k2 = 0;
    std::vector<int> unit_cols;
    std::vector<int> two_cols;
    std::vector<int> free_cols;
    std::vector<Z4Vec> unit_rows;
    std::vector<Z4Vec> two_rows;

    /// unit_cols + two_cols + free_cols, as a column permutation.
    std::vector<int> permutation() const;
};

struct CodeParams {
    int n = 0;
    int k1 = 0;
    int k2 = 0;
    long long d_lee = 0;
    long long d_hamming = 0;
};

/// A linear code over Z4 given by generator rows; the standard form is
/// derived eagerly and the code is immutable afterwards.
class Z4Code {
public:
    Z4Code(int n, std::vector<Z4Vec> generators);

    static Z4Code zero(int n);
    static Z4Code full(int n);
    /// Span of the all-ones row.
    static Z4Code repetition(int n);
    /// 2*I_n generator: the diagonal-2 self-dual code.
    static Z4Code diagonal_two(int n);

    int length() const { return form_.n; }
    int k1() const { return form_.k1; }
    int k2() const { return form_.k2; }
    /// log2 |C| = 2*k1 + k2.
    int log2_size() const { return 2 * form_.k1 + form_.k2; }
    bool is_zero() const { return log2_size() == 0; }
    uint64_t size(uint64_t budget = kDefaultBudget) const;

    const StandardForm& form() const { return form_; }
    const std::vector<Z4Vec>& generators() const { return gens_; }
    std::vector<Z4Vec> reduced_generators() const;

    bool contains(const Z4Vec& v) const;
    bool includes(const Z4Code& other) const;
    /// Equality as codeword sets.
    bool same_code(const Z4Code& other) const;

    /// Dual code from the standard-form block formula, columns restored to
    /// the original order. |C| * |dual| = 4^n.
    Z4Code dual() const;

    /// Visits every codeword exactly once, in a fixed order independent of
    /// everything but the standard form. f receives const Z4Vec&.
    template <class F>
    void for_each_codeword(F&& f, uint64_t budget = kDefaultBudget) const;

    std::vector<Z4Vec> codewords(uint64_t budget = kDefaultBudget) const;

    struct Weights {
        long long lee = 0;
        long long hamming = 0;
        Z4Vec lee_witness;  // a codeword attaining the minimum Lee weight
    };
    /// Minimum nonzero Lee and Hamming weights. Throws std::invalid_argument
    /// for the zero code (distance is defined over distinct pairs only).
    Weights min_weights(uint64_t budget = kDefaultBudget, int threads = 1) const;

    CodeParams params(uint64_t budget = kDefaultBudget, int threads = 1) const;

private:
    std::vector<Z4Vec> gens_;
    StandardForm form_;
};

namespace detail {

/// Mixed-radix span walk: rows with radix 4 (arbitrary Z4 multiples) or 2
/// (order-two rows). Indices [from, to) of the odometer are visited; the
/// wrap-around add is a no-op because 4*row = 0 (resp. 2*row = 0 for the
/// order-two rows).
template <class F>
void enumerate_span_range(const std::vector<Z4Vec>& rows, const std::vector<uint8_t>& radix,
                          int n, uint64_t from, uint64_t to, F&& f) {
    Z4Vec cur(static_cast<size_t>(n), Z4(0));
    std::vector<uint8_t> dig(rows.size(), 0);
    {
        uint64_t t = from;
        for (size_t j = 0; j < rows.size(); ++j) {
            dig[j] = static_cast<uint8_t>(t % radix[j]);
            t /= radix[j];
            for (uint8_t rep = 0; rep < dig[j]; ++rep) add_in_place(cur, rows[j]);
        }
    }
    for (uint64_t idx = from; idx < to; ++idx) {
        f(cur);
        size_t j = 0;
        while (j < rows.size()) {
            add_in_place(cur, rows[j]);
            if (++dig[j] < radix[j]) break;
            dig[j] = 0;
            ++j;
        }
    }
}

}  // namespace detail

template <class F>
void Z4Code::for_each_codeword(F&& f, uint64_t budget) const {
    if (log2_size() > 62 || (uint64_t{1} << log2_size()) > budget)
        throw budget_error(log2_size(), budget);
    std::vector<Z4Vec> rows = reduced_generators();
    std::vector<uint8_t> radix;
    radix.assign(static_cast<size_t>(form_.k1), 4);
    radix.insert(radix.end(), static_cast<size_t>(form_.k2), 2);
    detail::enumerate_span_range(rows, radix, form_.n, 0, uint64_t{1} << log2_size(),
                                 std::forward<F>(f));
}

}  // namespace ruv
