#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fourierlab::cli {

enum ExitCode : int {
  ok = 0,
  verification_failed = 1,
  usage_error = 2,
  not_closed_form = 3,
};

/// Runs one command line (args[0] is the program name). Output is
/// deterministic for a given command and environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fourierlab::cli
