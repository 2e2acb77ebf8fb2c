#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modtab::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitHolds = 0;         // success / property holds
inline constexpr int kExitFails = 1;         // property fails or methods disagree
inline constexpr int kExitUsage = 2;         // usage or domain error
inline constexpr int kExitInconclusive = 3;  // bounded search exhausted

// Dispatches one invocation.  `args` excludes the program name.  All normal
// output goes to `out`, errors to `err`; nothing is written to the real
// stdio streams, so callers can capture everything.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace modtab::cli
