#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superform::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kInputError = 2, kVerificationFailure = 3 };

/// Runs one command line (without the program name) and returns the exit
/// code.  Output is byte-deterministic for fixed arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding forms/ and golden/ in the source tree.
std::string default_data_dir();

}  // namespace superform::cli
