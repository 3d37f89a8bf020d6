#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balfan {

/// Runs the command-line interface on `args` (program name excluded) and
/// returns the process exit code:
///   0  success (including a balanced `check` and an infeasible `solve`)
///   1  `check` found the weight unbalanced
///   2  usage error (bad flags, unknown subcommand, missing file)
///   3  parse or validation error in an input file or argument
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace balfan
