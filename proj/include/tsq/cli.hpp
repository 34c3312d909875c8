#ifndef TSQ_CLI_HPP
#define TSQ_CLI_HPP

#include "json.hpp"

#include <string>
#include <vector>

namespace tsq {

/// Result of one CLI invocation: the JSON document printed to stdout and the
/// process exit code (0 ok, 1 module error, 2 usage error).
struct CommandResult {
    int exitCode = 0;
    nlohmann::ordered_json document;
};

/// Runs a command given argv-style arguments (program name excluded).
/// Never throws: every failure becomes a status=error document.
CommandResult runCli(const std::vector<std::string>& args);

} // namespace tsq

#endif
