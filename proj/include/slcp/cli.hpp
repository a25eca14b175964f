#pragma once

// Command-line front end. Subcommands: build, lcp-build, bench, stats,
// verify, gen. Exit codes: 0 success, 1 verification failure, 2 usage,
// 3 I/O (unreadable, unwritable or damaged files).

#include <ostream>
#include <string>
#include <vector>

namespace slcp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slcp
