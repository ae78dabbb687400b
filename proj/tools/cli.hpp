#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dmect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitCapExceeded = 4;

/// Environment variable naming the directory for outputs when --out is absent.
inline constexpr const char* kOutputDirVariable = "DMECT_OUTPUT_DIR";

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Nine significant digits; "inf" for infeasible.
std::string format_real(double value);

}  // namespace dmect::cli
