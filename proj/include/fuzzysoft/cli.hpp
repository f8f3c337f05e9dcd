#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzysoft {

/// Exit statuses of the command-line surface.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command (`args` excludes the program name) and returns its exit
/// status. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzysoft
