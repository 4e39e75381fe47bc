#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nlosc::cli {

// Entry point for the command-line tool; returns the process exit code:
//   0 success, 1 usage error, 2 invalid model parameters,
//   3 numerical verification failure.
// All output is deterministic: identical argument vectors produce
// byte-identical streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nlosc::cli
