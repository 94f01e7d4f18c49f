#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scs::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kCapacity = 3 };

// Runs one command line (without the program name). FILE arguments equal to
// "-" read from `in`. Errors are reported as a JSON object on `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace scs::cli
