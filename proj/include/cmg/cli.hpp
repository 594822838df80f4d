#ifndef CMG_CLI_HPP
#define CMG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cmg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_too_large = 3;
inline constexpr int exit_property_failure = 4;

/// Runs one command line (without the program name). Everything is written
/// to `out` / `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmg::cli

#endif  // CMG_CLI_HPP
