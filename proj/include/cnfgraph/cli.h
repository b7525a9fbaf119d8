#ifndef CNFGRAPH_CLI_H_
#define CNFGRAPH_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace cnfgraph {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitResourceCap = 70;

// Runs one command line (without the program name) against the given
// streams and returns the exit code. Subcommands: reduce, solve, analyze,
// census, minor, fixture.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace cnfgraph

#endif  // CNFGRAPH_CLI_H_
