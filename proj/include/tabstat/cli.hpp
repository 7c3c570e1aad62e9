#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tabstat {

// Runs the command line given by args (without the program name) and writes
// results to `out`. Diagnostics and timings go to `err`; everything written
// to `out` is byte-deterministic for fixed arguments and inputs.
//
// Exit codes: 0 success / verified; 1 verification found violations;
// 2 usage, parse or budget error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tabstat
