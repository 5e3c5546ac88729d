#pragma once

#include <ostream>
#include <span>
#include <string>

namespace msok::cli {

enum ExitCode : int { ok = 0, false_verdict = 1, usage_error = 2, cap_exceeded = 3 };

/// Runs the command line `args` (without the program name), writing
/// documents and verdicts to `out` and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace msok::cli
