#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmriv {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invariant_failure = 1;
inline constexpr int input_failure = 2;
inline constexpr int two_place_discovery = 3;
inline constexpr int size_cap = 4;
}  // namespace exit_code

/// Runs the command line `args` (without the program name). JSON lines go to
/// `out`, diagnostics to `err`; graph6 input is read from `in` when a
/// command is given no graphs or the corpus path "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace lmriv
