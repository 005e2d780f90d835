#ifndef HBP_CLI_HPP
#define HBP_CLI_HPP

#include <iosfwd>

namespace hbp::cli {

// Full command-line entry point; returns the process exit code
// (0 ok, 1 invalid input, 2 mathematical verification failure).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hbp::cli

#endif
