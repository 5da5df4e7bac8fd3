#pragma once

#include <ostream>

namespace dcsign::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNoMatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDataError = 3;

// Runs one dcsign invocation. Machine-readable results go to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcsign::cli
