#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhilb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` (or to --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qhilb::cli
