#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twinga::cli {

/// Parses a full command line (args[0] is the program name), dispatches the
/// subcommand and returns the process exit status.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twinga::cli
