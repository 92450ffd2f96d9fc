#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfinv::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    parse_failure = 1,
    validation_failure = 2,
    precondition_failure = 3,
    io_failure = 4,
};

/// Runs one command line (without the program name). JSON comes in on `in` and
/// goes out on `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace selfinv::cli
