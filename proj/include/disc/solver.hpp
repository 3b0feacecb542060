#pragma once

#include <string>

#include "disc/instance.hpp"

namespace disc {

// Exact verdict. pb-cycles by cyclic order, everything else on the
// biconnected component tree (one hole handled by a per-block group test).
bool check_feasibility(const Instance& inst);

// Full pipeline. Feasible plans are verified before they are returned.
SolveOutcome solve(const Instance& inst);

// True iff f runs from inst.start and every pebble ends on its target.
bool verify(const Instance& inst, const Plan& f, std::string* why = nullptr);

// Greedy cancellation pass; never longer than f and still verifying.
Plan compress(const Plan& f, const Instance& inst);

}  // namespace disc
