#pragma once

#include <iosfwd>

namespace stablenorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the `stablenorm` tool. Results go to `out` (JSON except for
/// `circuits`), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stablenorm::cli
