#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dimred::cli {

/// Exit codes: 0 success, 1 data/compute/I-O failure, 2 bad flags.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimred::cli
