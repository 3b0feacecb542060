#pragma once

#include <map>
#include <string>

#include "disc/plan.hpp"

namespace disc {

struct Instance {
  Digraph digraph;
  Configuration start;
  std::map<int, int> targets;  // pebble id -> vertex
};

// Checks the invariants: targets injective, inside V, every pebble present.
void validate_instance(const Instance& inst);

struct SolveStats {
  long long moves = 0;
  double ms = 0.0;
};

struct SolveOutcome {
  enum class Kind { Feasible, Infeasible, Unsupported };
  Kind kind = Kind::Infeasible;
  Plan plan;           // Feasible only
  std::string reason;  // Infeasible witness or Unsupported reason
  SolveStats stats;

  bool feasible() const { return kind == Kind::Feasible; }
};

const char* outcome_name(SolveOutcome::Kind k);

}  // namespace disc
