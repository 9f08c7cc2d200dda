#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedRecord = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands: list, show, verify, eval, selftest. `args` excludes the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grv::cli
