#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace akp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 64;

// args excludes the program name. One JSON document (or CSV rows) goes to
// out; diagnostics go to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akp::cli
