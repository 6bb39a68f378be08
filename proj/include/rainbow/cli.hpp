#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2, kUnderflow = 3 };

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
