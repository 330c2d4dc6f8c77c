// Command-line driver. `run` parses arguments (without the program name),
// writes the result to `out` (or to --out PATH) and diagnostics to `err`.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclohecke::cli {

enum ExitCode : int { ok = 0, bad_arguments = 1, invariant_violation = 2, resource_cap = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclohecke::cli
