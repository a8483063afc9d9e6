#pragma once

#include <iosfwd>

namespace mzvlab::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitMismatchStrict = 3,
};

/// Runs the command line tool with the given arguments (argv[0] is the
/// program name) and returns its exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mzvlab::cli
