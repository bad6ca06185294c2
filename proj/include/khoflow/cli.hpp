#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace khoflow {

// The command-line front end, callable in-process: args are the tokens after
// the program name.  Output is byte-deterministic for a given input,
// independent of the worker-thread count.  Exit codes: 0 success, 1 bad
// input or usage, 2 resource limits, 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace khoflow
