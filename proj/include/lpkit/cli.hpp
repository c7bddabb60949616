#ifndef LPKIT_CLI_HPP
#define LPKIT_CLI_HPP

#include <iosfwd>

namespace lpkit {

/// Exit codes: 0 true/confirmed/success, 1 false/denied, 2 error, precondition
/// violation or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpkit

#endif  // LPKIT_CLI_HPP
