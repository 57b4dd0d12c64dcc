#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcsoc/scalar.hpp"

namespace lcsoc {

using ExponentVec = std::vector<std::int32_t>;

// Parses a polynomial expression over the named variables into a term map
// keyed by exponent vector (one slot per variable, in declaration order).
// Grammar: sums/differences of products of factors; a factor is an integer,
// a variable, or a parenthesized expression, optionally raised to a
// nonnegative integer power with '^'.  '*' between factors is optional
// (juxtaposition multiplies).  Zero coefficients are dropped.
// Errors carry the offending position and token.
std::map<ExponentVec, Scalar> parse_polynomial(const std::string& text,
                                               const std::vector<std::string>& var_names,
                                               const Field& field);

// Restriction of parse_polynomial to a single monomial with coefficient 1
// (used for semigroup generator lists in configs).
ExponentVec parse_plain_monomial(const std::string& text,
                                 const std::vector<std::string>& var_names);

}  // namespace lcsoc
