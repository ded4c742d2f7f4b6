// Command-line front end, callable in-process for testing.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invsub {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitUsage = 2, kExitVerification = 3 };

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invsub
