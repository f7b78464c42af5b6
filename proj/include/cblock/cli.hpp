#pragma once

#include <string>
#include <vector>

#include "cblock/report.hpp"

namespace cblock {

// Executes one subcommand and returns the report; throws UsageError on bad
// argument shapes. Used by the binary and directly by tests.
RunReport dispatch(const std::vector<std::string>& args);

// Full entry point: prints the report (text or JSON per --json) and returns
// the exit status: 0 when every check passed, 1 otherwise, 2 on usage errors.
int run_cli(int argc, char** argv);

} // namespace cblock
