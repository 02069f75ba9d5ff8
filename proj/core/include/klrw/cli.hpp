#ifndef KLRW_CLI_HPP
#define KLRW_CLI_HPP

#include <string>
#include <vector>

namespace klrw::cli {

// Exit codes: 0 success, 1 a verification ran and failed, 2 bad usage or
// unparsable input.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// The whole command line tool as a library function: args excludes the
// program name.  Never throws; errors are mapped onto exit codes.
RunResult run(const std::vector<std::string>& args);

}  // namespace klrw::cli

#endif
