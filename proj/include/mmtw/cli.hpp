#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmtw {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitRefuted = 10;
inline constexpr int kExitResource = 20;

/// Runs one invocation; args[0] is the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmtw
