#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hamcert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns 0 when
/// the invoked verification succeeds, 1 on a verification or I/O failure,
/// 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "(7,11),(11,13)"; throws std::invalid_argument.
std::vector<std::pair<int, int>> parse_pairs(const std::string& text);

}  // namespace hamcert
