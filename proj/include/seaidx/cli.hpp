#pragma once

#include <iosfwd>

namespace seaidx::cli {

/// Runs the command-line driver. Returns 0 on success, 1 on data errors and 2
/// on usage errors. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seaidx::cli
