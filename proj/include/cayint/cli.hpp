#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cayint::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParseError = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kInvariantViolation = 4;

// Environment variable holding the default --cache-dir.
inline constexpr const char* kCacheDirEnv = "CAYINT_CACHE_DIR";

// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayint::cli
