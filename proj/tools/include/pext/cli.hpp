#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumericFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one subcommand.  args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pext::cli
