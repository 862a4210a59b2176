#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symplane::cli {

/// Parses `args` (args[0] is the program name), runs one subcommand and
/// writes JSON or CSV to `out`, one-line diagnostics to `err`. Returns the
/// process exit code: 0 ok, 1 usage, 2 geometric degeneracy, 3 numerical
/// singularity.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symplane::cli
