#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccdgf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,  // bad flags, bad parameter values
  kIo = 3,     // unreadable / malformed / unwritable files, mismatched inputs
};

/// Runs one command line. args excludes the program name. The JSON report
/// goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccdgf::cli
