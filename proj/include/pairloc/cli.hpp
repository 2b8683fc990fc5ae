#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairloc::cli {

inline constexpr const char* kEngineVersion = "pairloc-1.0.0";

/// Exit statuses of run().
enum Exit : int {
  kOk = 0,
  kModuleError = 1,
  kUsage = 2,
  kNonIsolated = 3,
  kCheckFailed = 4,
};

/// Runs one command line (without the program name). The result goes to
/// `out`; diagnostics and cache notices go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairloc::cli
