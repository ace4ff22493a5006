#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "r2k/automorphisms.hpp"
#include "r2k/derivation_json.hpp"

namespace r2k {

/// Splits on `sep` outside parentheses and trims blanks around each piece.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// "v1,v2,..." as scalars with indeterminates u1..u_{num_vars}.
std::vector<Scalar> parse_scalar_list(std::string_view text, std::size_t num_vars);

/// Assembles parameters from the flag values; empty strings take the identity
/// defaults (f ≡ 1, ξ = ε = 1, a = 0, b = 1).
AutParams aut_params_from_fields(const std::string& f, const std::string& xi, const std::string& eps,
                                 const std::string& a, const std::string& b, std::size_t rank, std::size_t num_vars);

/// Either the flag form "--f 2 --xi -1 --eps 1 --a 0 --b 1/2" or the JSON mirror
/// {"f": [...], "xi": 1, "eps": -1, "a": [...], "b": "1/2"}.
AutParams parse_aut_params(std::string_view text, std::size_t rank, std::size_t num_vars);

Json aut_params_to_json(const AutParams& p);
AutParams aut_params_from_json(const Json& j, std::size_t rank, std::size_t num_vars);

}  // namespace r2k
