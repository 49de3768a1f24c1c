#ifndef FPCL_CLI_HPP
#define FPCL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fpcl {

// Runs one CLI invocation (args exclude the program name). Exit codes:
// 0 success / equivalent, 1 well-formed negative verdict, 2 usage, parse or
// resource errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fpcl

#endif
