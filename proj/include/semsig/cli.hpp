#ifndef SEMSIG_CLI_HPP
#define SEMSIG_CLI_HPP

#include <iosfwd>

namespace semsig::cli {

/// Runs one command line. The report goes to `out`; warnings and a JSON
/// error object go to `err`. Returns 0 on success, 1 for bad input or usage,
/// 2 when a computation fails on valid input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semsig::cli

#endif  // SEMSIG_CLI_HPP
