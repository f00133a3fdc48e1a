#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symineq::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kPass = 0,
  kPropertyFailure = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// Runs `symineq <args...>` (args excludes the program name).  Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symineq::cli
