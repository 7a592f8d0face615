#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roughteam::cli {

/// Exit codes: 0 success, 1 usage/validation, 2 runtime failure,
/// 3 benchmark not met (compare only).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitBenchmark = 3;

/// Run the command line (args exclude argv[0]). All output goes to the given
/// streams; files named by --out are written whole-or-not-at-all
/// (write-then-rename).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roughteam::cli
