#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triclique::cli {

enum ExitCode : int {
    ok = 0,
    input_error = 1,
    budget_exceeded = 2,
    invariant_violation = 3,
};

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace triclique::cli
