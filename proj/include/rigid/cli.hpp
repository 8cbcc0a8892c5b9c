#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace rigid {

// Parses and runs one command line (arguments without the program name).
// Returns the process exit code: 0 on success, 2 on validation errors
// (malformed input), 3 on mathematical-precondition errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rigid
