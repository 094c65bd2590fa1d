#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfm {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,           // usage, parse or configuration error
  kExitVerifyFailed = 2,    // a verification check failed
  kExitInfeasible = 3,      // infeasible margins, incompatible input, state cap
};

/// Entry point of the `wfm` tool: subcommands sample, enumerate, verify and
/// nullmodel. Reports go to `out` (JSON or CSV), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfm
