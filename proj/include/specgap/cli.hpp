#ifndef SPECGAP_CLI_HPP
#define SPECGAP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace specgap {

// Full command-line dispatch, separated from main() so tests can drive it
// in process. args excludes the program name. Exit codes: 0 success,
// 2 invalid input or usage, 3 numerical/sampling failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace specgap

#endif
