// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

namespace logquad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBoundViolated = 3;

/// Runs the command line `argv[0] <subcommand> ...`, writing results to `out`
/// (unless --out is given) and diagnostics to `err`. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logquad::cli
