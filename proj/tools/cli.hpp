#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hankel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitComputation = 3;

// Runs one `hankel` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hankel::cli
