#pragma once

#include <string>
#include <string_view>

#include "r2k/algebra.hpp"

namespace r2k {

/// "L(2)", "G+(1,-2)", "C".
std::string to_string(const BasisSymbol& s);

/// Canonical rendering, e.g. "4*L(0) + 1/2*C" or "2*L(0) - 2*H(0) + 1/4*C".
/// Coefficients that are not single monomials are parenthesized:
/// "(u1 + u2)*L(0)", "(1)/(u1)*H(1)".
std::string to_string(const Element& x);

/// Parses the element grammar. Throws SyntaxError (with position) or RankMismatch.
Element parse_element(std::string_view text, std::size_t rank, std::size_t num_vars);
inline Element parse_element(std::string_view text, const Algebra& alg) {
  return parse_element(text, alg.rank(), alg.num_vars());
}

}  // namespace r2k
