#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankbench {

// Exit codes: 0 success, 1 invalid input or I/O failure, 2 bad command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, with the arguments that follow the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankbench
