#pragma once

#include "qukit/serialize.hpp"

#include <string>
#include <vector>

namespace qukit {

/// Names accepted by run_command.
const std::vector<std::string>& command_names();

/// Runs one command on a parsed config and returns its output records, one
/// self-describing object per record. Keys "seed", "format" and "output" are
/// accepted everywhere and left to the caller. Structural config problems
/// raise ConfigError; everything else raises the module's own error.
std::vector<json> run_command(const std::string& command, const json& config);

}  // namespace qukit
