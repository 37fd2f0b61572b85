#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specconn {

/// Exit codes: 0 success, 1 usage or I/O error, 2 a checked statement failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerdictFailure = 2;

/// Runs the command line `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

/// Fixed 12-decimal rendering with trailing zeros trimmed, keeping at least
/// one digit after the point ("1.0", "2.2360679775").
std::string format_real(double value);

}  // namespace specconn
