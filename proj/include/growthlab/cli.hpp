// Command-line front end. `run` is the whole program minus main() so that
// tests can drive it in-process.

#ifndef GROWTHLAB_CLI_HPP
#define GROWTHLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace growthlab::cli {

/// Exit codes: 0 success, 2 precondition failure or bad usage (an error
/// JSON is written to `out`), 1 internal error or non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace growthlab::cli

#endif  // GROWTHLAB_CLI_HPP
