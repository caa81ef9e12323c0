#pragma once

#include <iosfwd>

namespace polya::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUnsupportedInput = 2,
  kSearchExhausted = 3,
  kInternalError = 4,
};

/// Parses argv, runs one subcommand and writes its result to `out`;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polya::cli
