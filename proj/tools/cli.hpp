#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fibvar::cli {

/// Exit statuses of the fibvar command.
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kVerificationFailed = 2,
    kResourceExceeded = 3,
};

/// Runs one command line (arguments after the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace fibvar::cli
