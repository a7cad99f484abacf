#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octanet {

/// Runs the `octanet` command line in-process. `args` excludes the program
/// name. Returns 0 on success, 2 on bad flags or bad input, 1 on internal
/// failure (and under `verify --strict` when a known-consistent claim fails).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octanet
