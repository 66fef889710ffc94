#pragma once

#include <iosfwd>

namespace tqm::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationError = 1,
    kNumericalError = 2,
};

/// Entry point of the `tqmem` command line tool. Sweep output for "--out -"
/// goes to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tqm::cli
