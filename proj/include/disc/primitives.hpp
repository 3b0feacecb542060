#pragma once

#include <utility>
#include <vector>

#include "disc/plan.hpp"

namespace disc {

// R_k over a chain of cycles; amounts[i] applies to cycles[i].
struct RotationSpec {
  std::vector<Cycle> cycles;
  std::vector<int> amounts;
};

// h_{v,w}: moves the hole at v to w along a shortest w -> v path.
Plan bring_hole(const Configuration& a, const Digraph& d, int v, int w);
// Undoes a bring_hole plan exactly (every agent back in place).
Plan bring_back_hole(const Digraph& d, const Configuration& a, const Plan& h_plan);
// As bring_hole, but stops on the successor of w along the path.
std::pair<Plan, int> bring_hole_to_successor(const Configuration& a, const Digraph& d, int v,
                                             int w);
// r_k: k one-step shifts of every occupant of c, driven by a hole on c.
Plan cycle_rotation(const Configuration& a, const Cycle& c, int k);
Plan composite_rotation(const Configuration& a, const RotationSpec& spec);
RotationSpec inverse_rotation(const RotationSpec& spec);

// In-place forms used by the solvers; they update `a` and append to `out`.
void rotate_inplace(Configuration& a, const Cycle& c, int k, Plan& out);
void run_inplace(Configuration& a, const Plan& f, const Digraph& d);

}  // namespace disc
