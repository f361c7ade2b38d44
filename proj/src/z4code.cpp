#include "ruv/z4code.hpp"

#include <algorithm>
#include <thread>

namespace ruv {

budget_error::budget_error(int log2_size_, uint64_t budget)
    : std::runtime_error("enumeration budget exceeded: |C| = 2^" +
                         std::to_string(log2_size_) + " > " + std::to_string(budget)),
      log2_size(log2_size_) {}

std::vector<int> StandardForm::permutation() const {
    std::vector<int> p;
    p.reserve(static_cast<size_t>(n));
    p.insert(p.end(), unit_cols.begin(), unit_cols.end());
    p.insert(p.end(), two_cols.begin(), two_cols.end());
    p.insert(p.end(), free_cols.begin(), free_cols.end());
    return p;
}

namespace {

StandardForm compute_standard_form(int n, const std::vector<Z4Vec>& gens) {
    StandardForm sf;
    sf.n = n;
    std::vector<Z4Vec> work;
    for (const Z4Vec& g : gens) {
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("generator length mismatch");
        if (!is_zero(g)) work.push_back(g);
    }
    std::vector<bool> used(work.size(), false);
    std::vector<size_t> unit_pivot_rows, two_pivot_rows;

    // pass 1: unit pivots, scanning columns left to right; normalize to 1 and
    // clear the column in every other row
    for (int c = 0; c < n; ++c) {
        size_t sel = work.size();
        for (size_t i = 0; i < work.size(); ++i) {
            if (!used[i] && work[i][static_cast<size_t>(c)].is_unit()) {
                sel = i;
                break;
            }
        }
        if (sel == work.size()) continue;
        Z4 inv = work[sel][static_cast<size_t>(c)].inverse();
        if (inv != Z4(1)) work[sel] = scale(work[sel], inv);
        for (size_t i = 0; i < work.size(); ++i) {
            if (i == sel) continue;
            Z4 f = work[i][static_cast<size_t>(c)];
            if (!f.is_zero())
                work[i] = sub(work[i], scale(work[sel], f));
        }
        used[sel] = true;
        unit_pivot_rows.push_back(sel);
        sf.unit_cols.push_back(c);
    }

    // pass 2: remaining rows are purely even; pivots equal to 2
    for (int c = 0; c < n; ++c) {
        if (std::find(sf.unit_cols.begin(), sf.unit_cols.end(), c) != sf.unit_cols.end())
            continue;
        size_t sel = work.size();
        for (size_t i = 0; i < work.size(); ++i) {
            if (used[i]) continue;
            if (work[i][static_cast<size_t>(c)] == Z4(2)) {
                sel = i;
                break;
            }
        }
        if (sel == work.size()) continue;
        for (size_t i = 0; i < work.size(); ++i) {
            if (i == sel || used[i]) continue;
            if (work[i][static_cast<size_t>(c)] == Z4(2))
                work[i] = sub(work[i], work[sel]);
        }
        used[sel] = true;
        two_pivot_rows.push_back(sel);
        sf.two_cols.push_back(c);
    }

    for (size_t i = 0; i < work.size(); ++i) {
        if (!used[i] && !is_zero(work[i]))
            throw std::logic_error("standard form left a nonzero unreduced row");
    }

    for (size_t r : unit_pivot_rows) sf.unit_rows.push_back(work[r]);
    for (size_t r : two_pivot_rows) sf.two_rows.push_back(work[r]);
    sf.k1 = static_cast<int>(sf.unit_rows.size());
    sf.k2 = static_cast<int>(sf.two_rows.size());
    for (int c = 0; c < n; ++c) {
        bool pivot = std::find(sf.unit_cols.begin(), sf.unit_cols.end(), c) != sf.unit_cols.end() ||
                     std::find(sf.two_cols.begin(), sf.two_cols.end(), c) != sf.two_cols.end();
        if (!pivot) sf.free_cols.push_back(c);
    }
    return sf;
}

}  // namespace

Z4Code::Z4Code(int n, std::vector<Z4Vec> generators)
    : gens_(std::move(generators)), form_(compute_standard_form(n, gens_)) {
    if (n < 1) throw std::invalid_argument("code length must be >= 1");
}

Z4Code Z4Code::zero(int n) { return Z4Code(n, {}); }

Z4Code Z4Code::full(int n) {
    std::vector<Z4Vec> rows;
    for (int i = 0; i < n; ++i) {
        Z4Vec r(static_cast<size_t>(n), Z4(0));
        r[static_cast<size_t>(i)] = 1;
        rows.push_back(std::move(r));
    }
    return Z4Code(n, std::move(rows));
}

Z4Code Z4Code::repetition(int n) {
    return Z4Code(n, {Z4Vec(static_cast<size_t>(n), Z4(1))});
}

Z4Code Z4Code::diagonal_two(int n) {
    std::vector<Z4Vec> rows;
    for (int i = 0; i < n; ++i) {
        Z4Vec r(static_cast<size_t>(n), Z4(0));
        r[static_cast<size_t>(i)] = 2;
        rows.push_back(std::move(r));
    }
    return Z4Code(n, std::move(rows));
}

uint64_t Z4Code::size(uint64_t budget) const {
    if (log2_size() > 62 || (uint64_t{1} << log2_size()) > budget)
        throw budget_error(log2_size(), budget);
    return uint64_t{1} << log2_size();
}

std::vector<Z4Vec> Z4Code::reduced_generators() const {
    std::vector<Z4Vec> rows = form_.unit_rows;
    rows.insert(rows.end(), form_.two_rows.begin(), form_.two_rows.end());
    return rows;
}

bool Z4Code::contains(const Z4Vec& v) const {
    if (static_cast<int>(v.size()) != form_.n) return false;
    Z4Vec w = v;
    for (int i = 0; i < form_.k1; ++i) {
        Z4 c = w[static_cast<size_t>(form_.unit_cols[static_cast<size_t>(i)])];
        if (!c.is_zero()) w = sub(w, scale(form_.unit_rows[static_cast<size_t>(i)], c));
    }
    for (int i = 0; i < form_.k2; ++i) {
        Z4 c = w[static_cast<size_t>(form_.two_cols[static_cast<size_t>(i)])];
        if (c.is_unit()) return false;
        if (c == Z4(2)) w = sub(w, form_.two_rows[static_cast<size_t>(i)]);
    }
    return ruv::is_zero(w);
}

bool Z4Code::includes(const Z4Code& other) const {
    for (const Z4Vec& g : other.form_.unit_rows)
        if (!contains(g)) return false;
    for (const Z4Vec& g : other.form_.two_rows)
        if (!contains(g)) return false;
    return true;
}

bool Z4Code::same_code(const Z4Code& other) const {
    return length() == other.length() && log2_size() == other.log2_size() &&
           includes(other);
}

Z4Code Z4Code::dual() const {
    const StandardForm& sf = form_;
    const int n = sf.n;
    const int k1 = sf.k1, k2 = sf.k2;
    const int r = n - k1 - k2;
    // blocks of the permuted standard form
    auto A = [&](int i, int j) {  // k1 x k2
        return sf.unit_rows[static_cast<size_t>(i)][static_cast<size_t>(sf.two_cols[static_cast<size_t>(j)])];
    };
    auto B = [&](int i, int j) {  // k1 x r
        return sf.unit_rows[static_cast<size_t>(i)][static_cast<size_t>(sf.free_cols[static_cast<size_t>(j)])];
    };
    auto Cb = [&](int i, int j) {  // k2 x r, halved entries (rows are even)
        Z4 e = sf.two_rows[static_cast<size_t>(i)][static_cast<size_t>(sf.free_cols[static_cast<size_t>(j)])];
        return Z4(e.value() / 2);
    };

    std::vector<Z4Vec> rows;
    rows.reserve(static_cast<size_t>(r + k2));
    // ( -B^t - C^t A^t   C^t   I_r )
    for (int t = 0; t < r; ++t) {
        Z4Vec row(static_cast<size_t>(n), Z4(0));
        for (int i = 0; i < k1; ++i) {
            Z4 val = -B(i, t);
            for (int j = 0; j < k2; ++j) val -= Cb(j, t) * A(i, j);
            row[static_cast<size_t>(sf.unit_cols[static_cast<size_t>(i)])] = val;
        }
        for (int j = 0; j < k2; ++j)
            row[static_cast<size_t>(sf.two_cols[static_cast<size_t>(j)])] = Cb(j, t);
        row[static_cast<size_t>(sf.free_cols[static_cast<size_t>(t)])] = 1;
        rows.push_back(std::move(row));
    }
    // ( 2A^t   2I_k2   0 )
    for (int j2 = 0; j2 < k2; ++j2) {
        Z4Vec row(static_cast<size_t>(n), Z4(0));
        for (int i = 0; i < k1; ++i)
            row[static_cast<size_t>(sf.unit_cols[static_cast<size_t>(i)])] = Z4(2) * A(i, j2);
        row[static_cast<size_t>(sf.two_cols[static_cast<size_t>(j2)])] = 2;
        rows.push_back(std::move(row));
    }
    Z4Code d(n, std::move(rows));
    if (d.log2_size() + log2_size() != 2 * n)
        throw std::logic_error("dual cardinality identity |C||C_dual| = 4^n violated");
    return d;
}

std::vector<Z4Vec> Z4Code::codewords(uint64_t budget) const {
    std::vector<Z4Vec> out;
    out.reserve(static_cast<size_t>(size(budget)));
    for_each_codeword([&out](const Z4Vec& w) { out.push_back(w); }, budget);
    return out;
}

Z4Code::Weights Z4Code::min_weights(uint64_t budget, int threads) const {
    if (is_zero())
        throw std::invalid_argument("minimum distance undefined for the zero code");
    const uint64_t total = size(budget);

    std::vector<Z4Vec> rows = reduced_generators();
    std::vector<uint8_t> radix;
    radix.assign(static_cast<size_t>(form_.k1), 4);
    radix.insert(radix.end(), static_cast<size_t>(form_.k2), 2);

    struct Local {
        long long lee = -1;
        long long ham = -1;
        uint64_t lee_idx = 0;
        Z4Vec lee_wit;
    };

    auto scan = [&](uint64_t from, uint64_t to, Local& loc) {
        uint64_t idx = from;
        detail::enumerate_span_range(rows, radix, form_.n, from, to, [&](const Z4Vec& w) {
            const uint64_t hw = kern::active().nonzero_count(bytes(w), w.size());
            if (hw != 0) {
                const uint64_t lw = kern::active().lee_sum(bytes(w), w.size());
                if (loc.lee < 0 || static_cast<long long>(lw) < loc.lee) {
                    loc.lee = static_cast<long long>(lw);
                    loc.lee_idx = idx;
                    loc.lee_wit = w;
                }
                if (loc.ham < 0 || static_cast<long long>(hw) < loc.ham)
                    loc.ham = static_cast<long long>(hw);
            }
            ++idx;
        });
    };

    int t = std::max(1, threads);
    if (total < 4096) t = 1;
    std::vector<Local> locals(static_cast<size_t>(t));
    if (t == 1) {
        scan(0, total, locals[0]);
    } else {
        std::vector<std::thread> pool;
        const uint64_t chunk = (total + static_cast<uint64_t>(t) - 1) / static_cast<uint64_t>(t);
        for (int i = 0; i < t; ++i) {
            const uint64_t from = chunk * static_cast<uint64_t>(i);
            const uint64_t to = std::min(total, from + chunk);
            if (from >= to) break;
            pool.emplace_back([&scan, &locals, i, from, to] { scan(from, to, locals[static_cast<size_t>(i)]); });
        }
        for (auto& th : pool) th.join();
    }

    // deterministic merge: minimum weight first, then smallest enumeration index
    Weights out;
    out.lee = -1;
    out.hamming = -1;
    uint64_t best_idx = 0;
    for (const Local& loc : locals) {
        if (loc.lee < 0) continue;
        if (out.lee < 0 || loc.lee < out.lee ||
            (loc.lee == out.lee && loc.lee_idx < best_idx)) {
            out.lee = loc.lee;
            best_idx = loc.lee_idx;
            out.lee_witness = loc.lee_wit;
        }
        if (out.hamming < 0 || loc.ham < out.hamming) out.hamming = loc.ham;
    }
    return out;
}

CodeParams Z4Code::params(uint64_t budget, int threads) const {
    Weights w = min_weights(budget, threads);
    return CodeParams{length(), k1(), k2(), w.lee, w.hamming};
}

}  // namespace ruv
