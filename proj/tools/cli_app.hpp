#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autoseq::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSpec = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitStateCap = 4;
inline constexpr int kExitCap = 5;
inline constexpr int kExitBeta = 6;
inline constexpr int kExitUnresolved = 7;

/// Runs one invocation; args excludes the program name. Contractual output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autoseq::cli
