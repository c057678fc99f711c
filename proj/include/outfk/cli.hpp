#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace outfk {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // bad flags or arguments
  kExitDomainError = 2,   // a library error, printed with its name
  kExitUnknown = 3,       // the result is blocked on uncomputed cohomology
  kExitSelftestFailed = 4,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace outfk
