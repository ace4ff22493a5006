#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace r2k::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kAuditFailure = 1;
inline constexpr int kUsageError = 2;

/// Parses argv (argv[0] is the program name) and dispatches one command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace r2k::cli
