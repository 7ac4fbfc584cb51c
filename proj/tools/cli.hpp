#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padepm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitUsage = 3;

/// Runs the command line; args[0] is the program name. Results go to out
/// unless --out names a file, diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace padepm::cli
