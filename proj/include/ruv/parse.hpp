#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ruv/rcode.hpp"
#include "ruv/rpoly.hpp"
#include "ruv/z4poly.hpp"

namespace ruv {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, size_t position);
    size_t position;
};

/// Expression over x with coefficients in R. Terms are joined by + and -;
/// multiplication is '*' or juxtaposition; atoms are integers, u, v,
/// x or x^k, and parenthesized subexpressions. Examples:
///   x^4+x^3+3x^2+2x+1
///   (1-u)(x^2+x+1)+2
///   uvx^3+2uvx^2+x+1
RPoly parse_r_poly(std::string_view text);

/// Same grammar restricted to scalar coefficients (no u or v).
Z4Poly parse_z4_poly(std::string_view text);

/// A single ring element: an expression of degree 0 in x, e.g. "1+3u+3v+uv".
RElement parse_relement(std::string_view text);

/// Code specifications accepted by the command line:
///   cyclic:<n>:<expr>                       one R-polynomial ideal generator
///   components:<n>:<p1>;<p2>;<p3>;<p4>      four Z4 ideal generators
///   matrix:<n>:<r1,...|r2,...>              generator rows of R elements
///   random:<n>:<ngens>:<seed>               seeded random generators
RCode parse_code_spec(std::string_view spec, uint64_t budget = kDefaultBudget);

/// Seeded random R-code used by the verification commands: ngens generator
/// vectors with independent uniform symbols drawn from mt19937_64(seed).
RCode random_rcode(int n, int ngens, uint64_t seed);

}  // namespace ruv
