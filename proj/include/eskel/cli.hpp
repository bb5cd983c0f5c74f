#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eskel {

/// Runs the command line (arguments without the program name). Returns the process exit code:
/// 0 success, 2 when the skeleton looks incomplete for the given directions, 1 on errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eskel
