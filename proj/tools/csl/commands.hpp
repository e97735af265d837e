#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csl::cli {

/// Exit codes: 0 success / "yes", 1 semantic "no" (eq only), 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Prints the report for the worked non-naturality example and returns 0.
/// Throws std::logic_error if the example does not behave as expected.
int demo_non_natural(std::ostream& out);

}  // namespace csl::cli
