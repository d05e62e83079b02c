#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ty {

// Runs one CLI invocation; returns the process exit code.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ty
