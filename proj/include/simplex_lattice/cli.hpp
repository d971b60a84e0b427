#pragma once

#include <iosfwd>

namespace simplex_lattice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `simplex-lattice` tool. Reports go to `out` (or to
/// --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplex_lattice::cli
