#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spiky::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kPrecondition = 3,
    kVerification = 4,
};

// Runs one invocation; args excludes the program name. The JSON report goes to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Accepts plain numbers and multiples of pi: "0.5", "pi", "pi/3", "2pi/3",
// "2*pi/3".
double parse_angle(const std::string& text);

} // namespace spiky::cli
