#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "digipath/types.hpp"

namespace digipath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Parses "x,y,z" (whitespace around the numbers is ignored).
/// Throws std::invalid_argument on anything else.
GridPoint parse_point(std::string_view text);

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digipath::cli
