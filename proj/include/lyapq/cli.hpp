#ifndef LYAPQ_CLI_HPP
#define LYAPQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lyapq {

// Exit codes: 0 ok, 1 verify found failures, 2 bad input, 3 runtime error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lyapq

#endif
