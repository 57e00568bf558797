#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tuav::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvariant = 3;

/// Runs `tuav-place` with args (program name excluded). Returns the exit status.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace tuav::cli
