#pragma once

#include <ostream>

namespace annular::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitCap = 1,
  kExitUsage = 2,
  kExitVerificationFailed = 3,
  kExitInternal = 4,
};

/// Runs one invocation. Payload on `out`, diagnostics on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace annular::cli
