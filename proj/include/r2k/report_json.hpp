#pragma once

#include <string>
#include <string_view>

#include "r2k/derivation_json.hpp"
#include "r2k/report.hpp"

namespace r2k {

/// {"meta": {rank, generators, window},
///  "checks": [{id, inputs, status, cases, failures, witness?: {inputs, lhs, rhs}, note?}]}
Json report_to_json(const CheckReport& report);

/// Rendered report: pretty JSON (2-space indent, trailing newline) or one
/// line per record for "text". Throws InvalidArgument on other formats.
std::string emit_report(const CheckReport& report, std::string_view format);

}  // namespace r2k
