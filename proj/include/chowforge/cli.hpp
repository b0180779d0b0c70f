#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowforge {

/// Exit codes.
enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitFail = 2, kExitBudget = 3 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace chowforge
