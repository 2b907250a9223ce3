#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumgraph::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_verification = 2;
inline constexpr int exit_usage = 64;

/// Runs one command. `args` excludes the program name. Documents go to
/// `out` (or --output), error objects to `err`.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace sumgraph::cli
