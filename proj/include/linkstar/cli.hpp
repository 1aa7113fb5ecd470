#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkstar::cli {

// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand (gen, verify, shutter, render); args exclude argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkstar::cli
