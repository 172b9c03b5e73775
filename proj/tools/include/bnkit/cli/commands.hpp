#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bnkit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_parse = 2;

/// Runs one `bnkit` invocation; `args` excludes the program name. Results go
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bnkit::cli
