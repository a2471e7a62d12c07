#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conglab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. A file argument of "-" reads `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace conglab::cli
