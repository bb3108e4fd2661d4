#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chpos::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kUnsupported = 2;
inline constexpr int kInvariantFailure = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chpos::cli
