#pragma once

#include <ostream>

namespace hjc::cli {

/// Full command line entry point. Returns the process exit code:
/// 0 all pass, 1 check failure or golden mismatch, 2 configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hjc::cli
