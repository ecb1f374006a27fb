#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedgematch::cli {

enum ExitCode : int {
    kOk = 0,
    kCounterexample = 1,
    kParseFailure = 2,
    kInvalidObject = 3,
    kOverCap = 4,
    kIoFailure = 5,
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wedgematch::cli
