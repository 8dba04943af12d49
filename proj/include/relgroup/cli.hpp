#ifndef RELGROUP_CLI_HPP
#define RELGROUP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace relgroup::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kClaimFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line (without the program name). Results go to `out`
// (or the --out file), diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace relgroup::cli

#endif  // RELGROUP_CLI_HPP
