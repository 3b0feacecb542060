#pragma once

#include <optional>
#include <vector>

#include "disc/primitives.hpp"

namespace disc {

// Short directed cycles of a digraph: for every edge (a,b) the edge plus a
// shortest way back from b to a. Duplicates are dropped.
class CycleBank {
 public:
  CycleBank() = default;
  explicit CycleBank(const Digraph& d);

  const std::vector<Cycle>& cycles() const { return cycles_; }
  const std::vector<int>& through(int v) const { return through_[v]; }

 private:
  std::vector<Cycle> cycles_;
  std::vector<std::vector<int>> through_;
};

// Exact exchange A[u,v] for a hole at v: the agent at u ends on v, the hole on
// u, everyone else where they started. The plan is rotations R, the single
// move, then the complementary rotations; only cycles lying inside `region`
// are used (empty region = whole graph). Returns nullopt when the search over
// (agent, hole, helper hole) positions finds nothing.
std::optional<Plan> exchange_in_region(const Digraph& d, const CycleBank& bank,
                                       const Configuration& a, int u, int v,
                                       const std::vector<int>& region,
                                       long long state_cap = 4'000'000);

// Tries growing regions around {u, v}: the blocks holding u or v, then one
// more ring of blocks, then the whole graph.
std::optional<Plan> exchange(const Digraph& d, const Decomposition& dec, const CycleBank& bank,
                             const Configuration& a, int u, int v);

// Weaker form used when no exact exchange exists: the pebble at u ends on v
// and every other pebble is back in place, holes may be permuted. BFS over
// the pebble placements inside `region`; nullopt past `state_cap`.
std::optional<Plan> pebble_exchange(const Digraph& d, const Configuration& a, int u, int v,
                                    const std::vector<int>& region,
                                    long long state_cap = 2'000'000);

// Exact exchange by brute force: BFS over labelled placements (holes keep
// their identities) inside `region`. Complete, so only sensible for small
// regions; nullopt when nothing is found within `state_cap` states.
std::optional<Plan> labelled_exchange(const Digraph& d, const Configuration& a, int u, int v,
                                      const std::vector<int>& region,
                                      long long state_cap = 1'000'000);

}  // namespace disc
