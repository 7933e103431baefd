#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invmark::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationError = 1, // bad input; nothing (or nothing useful) written
    kPartialFailure = 2,  // run completed, some items failed and were recorded
};

/// Subcommands: pair, align, annotate, synth, eval, controller-sim.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same as above; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace invmark::cli
