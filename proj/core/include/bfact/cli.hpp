#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfact::cli {

// Exit codes: 0 all verified/computed, 1 violation found, 2 inconclusive
// results present, 3 usage or configuration error.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

/// Parses and runs one invocation.  `args` excludes the program name; the
/// report goes to `out` (or the --out path) and diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace bfact::cli
