#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace knotminer {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitCapacity = 3,
  kExitIo = 4,
};

/// Runs the CLI. `args` excludes the program name. Normal output goes to
/// `out`; every failure writes exactly one line to `err`.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace knotminer
