#pragma once

#include <iosfwd>

namespace aztec::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;     // bad argument values or input files
inline constexpr int kResource = 4;   // enumeration or sample caps
inline constexpr int kIntegrity = 5;  // failed structural or numerical checks

// Runs the aztec command line; all regular output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aztec::cli
