#include "disc/primitives.hpp"

#include <algorithm>
#include <string>

namespace disc {

Plan bring_hole(const Configuration& a, const Digraph& d, int v, int w) {
  if (!a.is_hole(v)) throw Error(Errc::VertexNotHole, "vertex " + std::to_string(v));
  if (v == w) return {};
  auto pi = shortest_path(d, w, v);
  if (pi.empty()) throw Error(Errc::Unreachable, "no path to the hole");
  Plan out;
  for (size_t i = pi.size() - 1; i-- > 0;) out.push_back({pi[i], pi[i + 1]});
  return out;
}

Plan bring_back_hole(const Digraph& d, const Configuration& a, const Plan& h_plan) {
  return reverse_plan(d, a, h_plan);
}

std::pair<Plan, int> bring_hole_to_successor(const Configuration& a, const Digraph& d, int v,
                                             int w) {
  if (!a.is_hole(v)) throw Error(Errc::VertexNotHole, "vertex " + std::to_string(v));
  auto pi = shortest_path(d, w, v);
  if (pi.size() < 2) throw Error(Errc::Unreachable, "no successor of w towards the hole");
  int s = pi[1];
  return {bring_hole(a, d, v, s), s};
}

void rotate_inplace(Configuration& a, const Cycle& c, int k, Plan& out) {
  int l = c.length();
  for (int r = 0; r < k; ++r) {
    int h = -1;
    for (int i = 0; i < l; ++i)
      if (a.is_hole(c.ring[i]) && (h < 0 || c.ring[i] < c.ring[h])) h = i;
    if (h < 0) throw Error(Errc::NoHoleOnCycle, "cycle has no hole");
    for (int s = 0; s < l - 1; ++s) {
      int p = (h - 1 + l) % l;
      out.push_back({c.ring[p], c.ring[h]});
      a.swap_vertices(c.ring[p], c.ring[h]);
      h = p;
    }
  }
}

void run_inplace(Configuration& a, const Plan& f, const Digraph& d) {
  for (size_t i = 0; i < f.size(); ++i) apply_move_inplace(a, f[i], d, static_cast<int>(i));
}

Plan cycle_rotation(const Configuration& a, const Cycle& c, int k) {
  Configuration w = a;
  Plan out;
  rotate_inplace(w, c, k, out);
  return out;
}

Plan composite_rotation(const Configuration& a, const RotationSpec& spec) {
  if (spec.cycles.size() != spec.amounts.size())
    throw Error(Errc::BadInput, "rotation amounts do not match cycles");
  Configuration w = a;
  Plan out;
  for (size_t i = 0; i < spec.cycles.size(); ++i) {
    try {
      rotate_inplace(w, spec.cycles[i], spec.amounts[i], out);
    } catch (const Error& e) {
      throw Error(Errc::NoHoleOnCycle, "cycle index " + std::to_string(i));
    }
  }
  return out;
}

RotationSpec inverse_rotation(const RotationSpec& spec) {
  RotationSpec r;
  for (size_t i = spec.cycles.size(); i-- > 0;) {
    r.cycles.push_back(spec.cycles[i]);
    // k = 0 stays 0: a full lap would need a hole the cycle may not have
    int l = spec.cycles[i].length();
    r.amounts.push_back(((l - spec.amounts[i]) % l + l) % l);
  }
  return r;
}

}  // namespace disc
