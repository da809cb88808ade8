#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pt {

// Runs one command-line invocation against the given streams and returns the
// process exit status: 0 for a pass-class outcome, 1 when the analysed
// equation fails (no admissible balance, FAILS verdict, or a diagnostic that
// does not support convergence), 2 for usage errors, unreadable input, or any
// internal error.  `args` holds the arguments after the program name.
int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pt
