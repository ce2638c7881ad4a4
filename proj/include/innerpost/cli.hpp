#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace innerpost {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;  // cap exceeded, no difference cocycle, internal errors
inline constexpr int parse = 2;    // syntax, dimension, usage
inline constexpr int axiom = 3;
inline constexpr int not_inner = 4;
inline constexpr int class_nontrivial = 5;
}  // namespace exit_code

/// Runs one subcommand; `args` excludes the program name. The report goes
/// to `out`, usage errors to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace innerpost
