#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilcone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitPrecondition = 4;

/// Runs one subcommand. `args` excludes the program name. JSON results go to
/// `out` (or to the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcone::cli
