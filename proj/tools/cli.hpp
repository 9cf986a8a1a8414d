#pragma once

#include <iosfwd>

namespace autoeq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

/// Entry point for the `autoeq` tool. Data goes to `out` (or --out),
/// diagnostics and the summary to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace autoeq::cli
