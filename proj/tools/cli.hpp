#pragma once

#include <ostream>
#include <span>
#include <string>

namespace orbitdeg::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndefined = 3;
inline constexpr int kExitResourceCap = 4;

// Runs the orbitdeg command line. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace orbitdeg::cli
