#pragma once

#include <json.hpp>

#include "r2k/derivations.hpp"

namespace r2k {

using Json = nlohmann::ordered_json;

/// {degree: [ints], parity: "even"|"odd", window: N,
///  entries: [{symbol: {kind, index}, value: [{kind, index, coeff}]}]}
Json table_to_json(const GradedMapTable& table);

/// Inverse of table_to_json. Throws InvalidArgument on schema violations,
/// SyntaxError on bad scalar text, RankMismatch on index lengths.
GradedMapTable table_from_json(const Json& j, const Algebra& alg);

Json symbol_to_json(const BasisSymbol& s);
BasisSymbol symbol_from_json(const Json& j, std::size_t rank);

}  // namespace r2k
