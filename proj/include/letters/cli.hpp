#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace letters::cli {

// Parses args (no program name) and executes one subcommand, reading graph
// streams from `in` when --in is "-".  Returns the process exit status;
// usage and data errors print a single "error: ..." line to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace letters::cli
