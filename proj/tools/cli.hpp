#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcat::cli {

inline constexpr char const* kReportSchema = "pcat-report/1";
inline constexpr char const* kBoundsDirVariable = "PCAT_BOUNDS_DIR";

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, bound_exhausted = 3 };

// args excludes the program name. The report goes to --out when given, to
// out otherwise; diagnostics go to err.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace pcat::cli
