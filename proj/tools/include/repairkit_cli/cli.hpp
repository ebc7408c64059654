#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace repairkit::cli {

/// Runs the whole CLI against explicit streams. `args` excludes the program
/// name. Returns the process exit code:
///   0 ok, 2 I/O error, 3 invalid input, 4 referential integrity,
///   5 internal error.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace repairkit::cli
