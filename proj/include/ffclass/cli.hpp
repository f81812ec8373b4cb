#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffclass {

/// Runs the command-line front end on the given arguments (program name
/// excluded). Results go to out, diagnostics to err.
/// Exit status: 0 success, 1 mathematical precondition failure, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace ffclass
