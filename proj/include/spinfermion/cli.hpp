#ifndef SPINFERMION_CLI_HPP
#define SPINFERMION_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spinfermion {

/// Runs one CLI invocation. Exit codes: 0 success/pass, 1 usage error,
/// 2 verification failure, 3 incompatible representation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spinfermion

#endif
