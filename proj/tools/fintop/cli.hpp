#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fintop::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFalse = 1,
  kInvalidInput = 2,
  kSizeLimit = 3,
};

/// Runs one fintop invocation. `args` excludes the program name. Payloads go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fintop::cli
