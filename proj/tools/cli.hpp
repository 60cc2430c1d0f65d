#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgg::cli {

/// Exit codes: 0 success, 1 verification found violations, 2 bad input.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kBadInput = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgg::cli
