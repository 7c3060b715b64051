#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invlab::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kVerificationFailed = 2 };

// argv excludes the program name.  Normal output goes to `out`, diagnostics
// (one line each) to `err`; artifacts named by --out are written to disk.
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

}  // namespace invlab::cli
