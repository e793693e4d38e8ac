#pragma once

// Command line front end: pushforward, gb, ring, verify-all.

#include <iosfwd>
#include <string>
#include <vector>

namespace k0::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

/// Parses `args` (without the program name) and runs the command. Reports go
/// to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k0::cli
