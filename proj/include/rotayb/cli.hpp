#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotayb::cli {

/// Runs one command line (without the program name) and returns the exit
/// status: 0 pass (and not-applicable unless --strict), 1 a checked property
/// fails, 2 usage or input error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rotayb::cli
