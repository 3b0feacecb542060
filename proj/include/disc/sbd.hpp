#pragma once

#include <map>
#include <optional>

#include "disc/exchange.hpp"

namespace disc {

// A strongly biconnected component B plus an outside vertex v hooked to z.
struct AttachedComponent {
  enum class Mode { EntryEdge, AttachedEdge };
  Component component;
  int external = -1;  // v
  int attach = -1;    // z, inside the component
  Mode mode = Mode::EntryEdge;

  // B's edges plus (v,z), and (z,v) for AttachedEdge. Global vertex ids.
  Digraph digraph() const;
};

// Basic cycle (>= 3 vertices) with a non-trivial ear whose ends sit on it.
struct SwapGadget {
  Cycle basic_cycle;
  Ear ear;
};

std::optional<SwapGadget> find_gadget(const Component& c);

// Does the pebble order around the cycle survive? `ring` is the cycle.
bool cyclic_order_matches(const std::vector<int>& ring, const Configuration& a,
                          const std::map<int, int>& targets);

// nullopt when the cyclic orders differ.
std::optional<Plan> solve_pb_cycle(const Component& c, const Configuration& a,
                                   const std::map<int, int>& targets);

// Puts pebble p on v; other agents may move.
Plan mpp_solve(const Component& c, const Configuration& a, int p, int v);

// The four exchange constructions. Each returns a plan whose result is
// swap_config(a, x, y) for the pebble at x and the hole at y.
Plan entry_swap(const AttachedComponent& ac, const Configuration& a, int w);
Plan stay_in_swap(const Component& c, const Configuration& a, int v, int w);
Plan attached_edge_swap(const AttachedComponent& ac, const Configuration& a, int u, int w);
Plan two_bcc_swap(const Digraph& d, const Decomposition& dec, const Configuration& a, int av,
                  int bv);

}  // namespace disc
