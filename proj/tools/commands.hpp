#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropkit::cli {

/// Runs one command.  args excludes the program name.  Returns the exit code:
/// 0 success, 1 failing verdict, 2 usage, parse or invariant error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64(const std::string& bytes);

}  // namespace tropkit::cli
