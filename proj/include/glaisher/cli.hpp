#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glaisher {

// Runs a command line (without argv[0]). Exit codes: 0 all checks passed,
// 1 at least one verification failed, 2 usage or parameter error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glaisher
