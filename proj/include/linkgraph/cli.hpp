#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkgraph {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_limit = 3;

/// Runs the command line tool with `args` (program name excluded). Results go
/// to `out` unless --out is given; diagnostics go to `err` as JSON.
auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
