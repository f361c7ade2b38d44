#include "ruv/parse.hpp"

#include <cctype>
#include <random>

#include "ruv/cyclic.hpp"

namespace ruv {

parse_error::parse_error(const std::string& message, size_t pos)
    : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
      position(pos) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RPoly parse() {
        RPoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    RPoly expression() {
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = take() == '-';
        RPoly acc = term();
        if (negative) acc = RPoly{} - acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            RPoly t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    RPoly term() {
        RPoly acc = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                take();
                acc = acc * factor();
            } else if (c == '(' || c == 'u' || c == 'v' || c == 'x' || std::isdigit(c)) {
                acc = acc * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    RPoly factor() {
        skip_ws();
        const size_t here = pos_;
        char c = peek();
        if (c == '(') {
            take();
            RPoly inner = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return inner;
        }
        if (std::isdigit(c)) {
            return RPoly::constant(RElement::scalar(Z4(static_cast<int>(integer() % 4))));
        }
        if (c == 'u') {
            take();
            return RPoly::constant(r_u());
        }
        if (c == 'v') {
            take();
            return RPoly::constant(r_v());
        }
        if (c == 'x') {
            take();
            long long k = 1;
            skip_ws();
            if (peek() == '^') {
                take();
                skip_ws();
                if (!std::isdigit(peek())) fail("expected exponent");
                k = integer();
                if (k > 4096) fail("exponent too large");
            }
            RVector coeffs(static_cast<size_t>(k) + 1, r_zero());
            coeffs.back() = r_one();
            return RPoly{std::move(coeffs)};
        }
        pos_ = here;
        fail("expected a coefficient, u, v, x or '('");
        return {};
    }

    long long integer() {
        long long v = 0;
        size_t digits = 0;
        while (std::isdigit(peek())) {
            v = v * 10 + (take() - '0');
            if (++digits > 9) fail("number too long");
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    std::string_view text_;
    size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

int parse_length(std::string_view s) {
    int n = 0;
    if (s.empty()) throw parse_error("missing length", 0);
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("invalid length '" + std::string(s) + "'", 0);
        n = n * 10 + (c - '0');
        if (n > 4096) throw parse_error("length too large", 0);
    }
    if (n < 1) throw parse_error("length must be >= 1", 0);
    return n;
}

}  // namespace

RPoly parse_r_poly(std::string_view text) { return Parser(text).parse(); }

Z4Poly parse_z4_poly(std::string_view text) {
    RPoly p = parse_r_poly(text);
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        const RElement& c = p.coeffs()[i];
        if (!c.b().is_zero() || !c.c().is_zero() || !c.d().is_zero())
            throw parse_error("coefficient of x^" + std::to_string(i) +
                                  " is not a Z4 scalar: " + c.to_string(),
                              0);
    }
    return p.project(0);
}

RElement parse_relement(std::string_view text) {
    RPoly p = parse_r_poly(text);
    if (p.degree().value_or(0) > 0)
        throw parse_error("expected a ring element, got a polynomial in x", 0);
    return p.coeff(0);
}

RCode random_rcode(int n, int ngens, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RVector> gens;
    for (int g = 0; g < ngens; ++g) {
        RVector row;
        row.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const uint64_t bits = rng();
            row.push_back(RElement::from_coeff(static_cast<int>(bits & 3),
                                               static_cast<int>((bits >> 2) & 3),
                                               static_cast<int>((bits >> 4) & 3),
                                               static_cast<int>((bits >> 6) & 3)));
        }
        gens.push_back(std::move(row));
    }
    return decompose_rcode(n, gens);
}

RCode parse_code_spec(std::string_view spec, uint64_t budget) {
    (void)budget;
    const auto parts = split(spec, ':');
    if (parts.size() < 2) throw parse_error("expected <kind>:<n>:...", 0);
    const std::string_view kind = parts[0];
    const int n = parse_length(parts[1]);

    if (kind == "cyclic") {
        if (parts.size() != 3) throw parse_error("expected cyclic:<n>:<expr>", 0);
        return r_ideal_code(parse_r_poly(parts[2]), n);
    }
    if (kind == "components") {
        if (parts.size() != 3) throw parse_error("expected components:<n>:<p1>;<p2>;<p3>;<p4>", 0);
        const auto polys = split(parts[2], ';');
        if (polys.size() != 4) throw parse_error("expected exactly four component polynomials", 0);
        std::array<Z4Code, 4> comps = {ideal_code({parse_z4_poly(polys[0])}, n),
                                       ideal_code({parse_z4_poly(polys[1])}, n),
                                       ideal_code({parse_z4_poly(polys[2])}, n),
                                       ideal_code({parse_z4_poly(polys[3])}, n)};
        return build_rcode(comps[0], comps[1], comps[2], comps[3]);
    }
    if (kind == "matrix") {
        if (parts.size() != 3) throw parse_error("expected matrix:<n>:<row>|<row>...", 0);
        std::vector<RVector> gens;
        for (std::string_view row : split(parts[2], '|')) {
            RVector r;
            for (std::string_view cell : split(row, ',')) r.push_back(parse_relement(cell));
            if (static_cast<int>(r.size()) != n)
                throw parse_error("row has " + std::to_string(r.size()) + " entries, expected " +
                                      std::to_string(n),
                                  0);
            gens.push_back(std::move(r));
        }
        return decompose_rcode(n, gens);
    }
    if (kind == "random") {
        if (parts.size() != 4) throw parse_error("expected random:<n>:<ngens>:<seed>", 0);
        const int ngens = parse_length(parts[2]);
        uint64_t seed = 0;
        for (char c : parts[3]) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("invalid seed", 0);
            seed = seed * 10 + static_cast<uint64_t>(c - '0');
        }
        return random_rcode(n, ngens, seed);
    }
    throw parse_error("unknown code spec kind '" + std::string(kind) + "'", 0);
}

}  // namespace ruv
