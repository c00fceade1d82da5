#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdecomp {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitUndecided = 3 };

/// Runs `kdecomp` with `args` (without the program name). Input files named
/// "-" or omitted are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kdecomp
