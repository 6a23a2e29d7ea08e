#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorflat {

/// Runs one lorflat command line (without the program name) against the
/// given streams. Returns the exit code: 0 success, 1 a domain check failed,
/// 2 unusable input (bad flags or malformed documents).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lorflat
