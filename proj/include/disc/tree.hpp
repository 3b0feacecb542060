#pragma once

#include <map>
#include <string>
#include <vector>

#include "disc/exchange.hpp"

namespace disc {

// Biconnected component tree. Ids 0..n-1 are the original vertices; each
// non-trivial block gets a trans-shipment vertex n+i, i = the block's index in
// decompose() order. Bridges stay as plain tree edges.
struct BctTree {
  int original_count = 0;
  std::vector<std::vector<int>> adj;     // sorted
  std::vector<std::vector<int>> leaves;  // per trans index, sorted
  std::vector<std::vector<int>> kadj;    // block graph: stars become cliques

  int vertex_count() const { return static_cast<int>(adj.size()); }
  int trans_count() const { return static_cast<int>(leaves.size()); }
  bool is_trans(int x) const { return x >= original_count; }
  const std::vector<int>& star(int s) const { return leaves[s - original_count]; }
  // Trans vertex shared by u and v, or -1.
  int star_between(int u, int v) const;
  std::vector<Edge> edges() const;  // (min,max), sorted
};

BctTree build_bct(const UndirectedGraph& g);
// `t <id>` per trans vertex then `e <u> <v>` per tree edge.
std::string dump_tree(const BctTree& t);

struct TreeMove {
  int from = -1;
  int via = -1;  // trans vertex for ThroughStar, -1 for Direct
  int to = -1;
  bool through_star() const { return via >= 0; }
  bool operator==(const TreeMove&) const = default;
};
using TreePlan = std::vector<TreeMove>;

// Occupancy on the tree: pebble id per original vertex, -1 for holes.
// Trans vertices never hold anything so they are not stored.
struct TreeConfig {
  std::vector<int> occ;
  int hole_count() const;
  bool operator==(const TreeConfig&) const = default;
};

TreeConfig lift_config(const Configuration& a);
// Throws InvalidPlan when the move does not fit the tree or the target is taken.
void apply_tree_move(const BctTree& t, TreeConfig& c, const TreeMove& m, int index = -1);
TreeConfig apply_tree_plan(const BctTree& t, const TreeConfig& c, const TreePlan& p);

bool pmt_feasible(const BctTree& t, const TreeConfig& start, const std::map<int, int>& targets);

// Unlabeled routing onto the target set. The second member is the occupancy
// after the prefix; its pebbles sit on a permutation of the targets.
std::pair<TreePlan, TreeConfig> pmt_to_ppt(const BctTree& t, const TreeConfig& start,
                                           const std::map<int, int>& targets);
TreePlan ppt_solve(const BctTree& t, const TreeConfig& start, const std::map<int, int>& targets);

// Maps every tree move onto an exact digraph exchange.
Plan convert_path(const TreePlan& tp, const Digraph& d, const Decomposition& dec, const BctTree& t,
                  const Configuration& a);

}  // namespace disc
