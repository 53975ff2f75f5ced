#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altsnake {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kRefusal = 3, kOracleMismatch = 4 };

/// Runs the command line front end. args excludes the program name.
int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace altsnake
