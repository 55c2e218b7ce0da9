#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facet::cli {

/// Runs the command line `args` (args[0] is the program name). Interactive
/// mode only controls whether the REPL prints prompts.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        bool interactive = false);

}  // namespace facet::cli
