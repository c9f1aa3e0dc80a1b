#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semires::cli {

enum ExitCode : int { Ok = 0, Usage = 1, Unsupported = 2, Verification = 3 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "7,9,8,13" -> {7,9,8,13}, order preserved. Throws ParseError.
std::vector<long long> parse_generators(const std::string& text);

}  // namespace semires::cli
