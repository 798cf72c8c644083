#ifndef DEPTHCHART_CLI_HPP
#define DEPTHCHART_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace depthchart::cli {

inline constexpr const char* kVersion = "0.1.0";

// Runs one invocation. Result JSON goes to out, diagnostics to err.
// Returns 0 on success, 2 on input errors (bad flags, malformed files,
// misaligned data), 1 on anything unexpected.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace depthchart::cli

#endif  // DEPTHCHART_CLI_HPP
