#pragma once

#include <iostream>

#include "cobkit/io.hpp"

namespace cobkit {

// Runs one CLI invocation. Exit codes: 0 for any resolved verdict (including
// UnknownPerPaper), 1 for input or validation errors, 2 for unresolved
// decision preconditions.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobkit
