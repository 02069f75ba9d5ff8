#include "klrw/cli.hpp"

namespace klrw::cli {

RunResult run(const std::vector<std::string>&) {
  return {2, "", "klrw: not yet implemented\n"};
}

}  // namespace klrw::cli
