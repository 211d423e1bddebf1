#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcover {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitBadConfig = 3,
  kExitInfeasible = 4,
};

// Runs one CLI invocation. `args` excludes the program name. Subcommands that
// take a configuration read it from --config or, when absent, from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace kcover
