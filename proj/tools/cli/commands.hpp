#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phicert::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,             // a verdict was produced (any verdict)
    kStrictFailure = 1,  // --strict and a criterion's hypotheses failed; corpus mismatch
    kUsageError = 2,     // bad flags, unparsable polynomial, invalid structural input
    kInternalError = 3,
};

/// Runs one invocation. `args` excludes the program name. JSON results go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Highest a_i index accepted as a --a<i> flag.
inline constexpr int kMaxPartFlags = 200;

}  // namespace phicert::cli
