#pragma once

#include <ostream>

namespace crisscross::cli {

/// Runs the command-line front end. Returns the process exit code:
/// 0 success, 2 validation error, 3 decode failure, 1 failed self-check.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace crisscross::cli
