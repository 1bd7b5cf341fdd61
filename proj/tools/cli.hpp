#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agewatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Help text goes to
/// `out`, diagnostics to `err`; machine output is only ever written to files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args);

} // namespace agewatch::cli
