#pragma once

#include <ostream>

namespace finsum::cli {

enum ExitCode : int { ok = 0, unexpected_failure = 1, usage_error = 2 };

/// Parses argv and runs one subcommand: y, table, series, verify, volkenborn
/// or oeis. Results go to `out` (or the --output file); diagnostics and usage
/// text go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace finsum::cli
