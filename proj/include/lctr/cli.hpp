#pragma once

#include <ostream>

namespace lctr::cli {

// Exit codes besides 0.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;  // bad flags or unparseable partition
inline constexpr int kExitEmptyBoard = 3;
inline constexpr int kExitBudget = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lctr::cli
