#ifndef SKEWPBW_CLI_HPP
#define SKEWPBW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace skewpbw {

/// Runs one CLI invocation (args exclude the program name) and writes results
/// to out / diagnostics to err. Exit status: 0 success, 1 domain error,
/// 2 usage or parse error. Never throws on malformed input.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewpbw

#endif
