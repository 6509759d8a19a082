#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `ace` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on validation/check failure, 2 on usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ace::cli
