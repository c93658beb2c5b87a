#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ezeta::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name).  Reports go to out,
/// diagnostics to err.  The environment is only consulted for EZETA_CONFIG.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ezeta::cli
