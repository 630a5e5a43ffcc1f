#pragma once

#include <ostream>

namespace rectiforce::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `rectiforce` command. Results go to `out` (or to the
/// configured output file), messages to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rectiforce::cli
