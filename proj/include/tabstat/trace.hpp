#pragma once

#include <string>
#include <vector>

#include "tabstat/filling.hpp"

namespace tabstat {

// One operator application inside a bijection or CLI `apply` run. Structural
// steps ("reverse", "stack", "strip") carry enough parameters to be replayed;
// operator steps ("phi", "rho", "t", "t-range") are replayed by re-applying
// the operator to the previous state.
struct TraceStep {
    std::string op;
    int column = 0;
    int row_from = 0;             // rho: ending row h; t: the swapped row
    int row_to = 0;               // rho: starting row k
    std::vector<ExtValue> cells;  // stack: the new top row, left to right
    Filling after;
};

struct Trace {
    Filling input;
    std::vector<TraceStep> steps;
    Filling output;
};

// Re-runs every step from the input and checks that each intermediate state
// and the final output match the recorded ones.
bool replay(const Trace& trace);

std::string trace_to_json_text(const Trace& trace);
std::string trace_to_text(const Trace& trace);

}  // namespace tabstat
