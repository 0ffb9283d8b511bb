#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbtan::cli {

/// Exit codes of `run`.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Environment fallbacks STAIRCASE_CAP,
/// STAIRCASE_BUDGET and STAIRCASE_CACHE_DIR are read here.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbtan::cli
