#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swanson::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

int run(int argc, char** argv);

/// Same as run(), with the arguments after the program name and explicit
/// streams for stdout/stderr output.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace swanson::cli
