#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tracedist::cli {

/// Exit codes: 0 success, 2 usage or input error, 3 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tracedist::cli
