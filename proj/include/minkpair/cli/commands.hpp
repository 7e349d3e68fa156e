#pragma once

#include <ostream>
#include <span>
#include <string>

namespace minkpair {

/// Exit codes of the command-line front end.
inline constexpr int kExitVerdict = 0;
inline constexpr int kExitInputError = 2;

/// Runs one command line (arguments after the program name). Verdicts go to
/// `out`; diagnostics go to `err`. Returns 0 for any computed verdict, true
/// or false, and 2 for malformed input or domain errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace minkpair
