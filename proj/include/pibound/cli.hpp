#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pibound {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `pibound` tool. `args` excludes the program name.
/// Returns 0 when all asserted bounds hold, 1 on an asserted violation and
/// 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pibound
