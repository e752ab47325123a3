#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidity {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSizeGuard = 3;

/// Runs the `rigidity` command line. args excludes the program name.
/// Graph paths may be "-" to read the edge list from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rigidity
