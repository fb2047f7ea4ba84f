#ifndef FRACBURGERS_CLI_HPP
#define FRACBURGERS_CLI_HPP

namespace fracburgers {
namespace cli {

// Exit codes: 0 all asserted checks passed, 1 a check failed, 2 usage or
// configuration error.
int run(int argc, const char* const* argv);

} // namespace cli
} // namespace fracburgers

#endif
