#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdas::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kAccepted = 0,      // accepted / verified
  kRejected = 1,      // rejected / disagreement
  kInconclusive = 2,  // budget exhausted / inconclusive
  kUsageError = 3,    // usage or validation error
};

/// Runs the `workbench` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pdas::cli
