#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFalsified = 2;
inline constexpr int kExitCounterexample = 3;

/// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainring::cli
