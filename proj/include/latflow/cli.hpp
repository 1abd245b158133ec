#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latflow {

// Runs one command-line invocation (argv without the program name) and
// writes reports to `out`, diagnostics to `err`. Returns the process exit
// code: 0 decision-true / success, 1 decision-false, 2 invalid input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latflow
