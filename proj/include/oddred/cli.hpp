#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddred {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailure = 1;
inline constexpr int kExitNoOddRed = 2;
inline constexpr int kExitNoPerfectMatching = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataFormat = 65;

// Runs one command line (without the program name). The JSON report goes to out and
// a one-line human summary to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddred
