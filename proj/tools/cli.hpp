#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit codes: 0 verified / nothing found,
/// 1 counterexample, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itop::cli
