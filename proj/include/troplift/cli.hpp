#pragma once

#include "troplift/errors.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace troplift {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,        // unreadable input, schema or argument error
  kExitPrecondition = 2, // a precondition of the requested computation fails
  kExitInternal = 3,     // a self-check of the library tripped
};

int exit_code_for(ErrorKind kind);

// Runs one command line (args[0] is the program name). Results go to the -o
// file or to `out`; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace troplift
