#pragma once
// Shared graphs and random helpers for the test binaries. Graphs written with
// 1-based labels are shifted down by one.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "disc/graph.hpp"
#include "disc/instance.hpp"
#include "disc/plan.hpp"

namespace fx {

using disc::Digraph;
using disc::Edge;

inline Digraph from_labels(int n, const std::vector<Edge>& one_based) {
  Digraph d(n);
  for (auto [u, v] : one_based) d.add_edge(u - 1, v - 1);
  return d;
}

inline Digraph cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_edge(i, (i + 1) % n);
  return d;
}

// Directed 5-cycle 1->2->3->4->5->1.
inline Digraph five_cycle() { return cycle(5); }

// Open ear decomposition example: basic cycle 1..5, ears 3-6-7-4 and 1-8-9-10-7.
inline Digraph oed_example() {
  return from_labels(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {3, 6}, {6, 7}, {7, 4},
                          {1, 8}, {8, 9}, {9, 10}, {10, 7}});
}

// 13 vertices: block 1-4, corridor 3-5-6, block 6..11, block 11-13.
inline Digraph composed_example() {
  return from_labels(13, {{1, 2},  {2, 3},  {3, 4},  {4, 1},   {3, 5},   {5, 3},
                          {5, 6},  {6, 5},  {6, 7},  {7, 8},   {8, 9},   {9, 6},
                          {9, 10}, {10, 11}, {11, 7}, {11, 12}, {12, 13}, {13, 11}});
}

// Entry example: v=0, y=1, then three chained cycles. w=9, u=10.
//   C3 = 1 2 3 4 5, C2 = 4 5 6 7 8, C1 = 6 7 9 10
inline Digraph entry_example() {
  Digraph d(11);
  for (auto [a, b] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6},
                                       {6, 7}, {7, 8}, {8, 4}, {7, 9}, {9, 10}, {10, 6}})
    d.add_edge(a, b);
  return d;
}

// 6-cycle 0..5 with the bidirectional edge 4<->6 attached.
inline Digraph attached_example() {
  Digraph d = cycle(6);
  Digraph e(7);
  for (auto [a, b] : d.edges()) e.add_edge(a, b);
  e.add_edge(4, 6);
  e.add_edge(6, 4);
  return e;
}

// Random strongly connected digraph: a random Hamiltonian cycle plus extras,
// some of them bidirectional.
inline Digraph random_sc(int n, std::mt19937_64& rng, double extra = 0.25) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Digraph d(n);
  if (n >= 2)
    for (int i = 0; i < n; ++i) d.add_edge(perm[i], perm[(i + 1) % n]);
  std::uniform_real_distribution<double> U(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && U(rng) < extra) {
        d.add_edge(u, v);
        if (U(rng) < 0.3) d.add_edge(v, u);
      }
  return d;
}

// Random configuration with the given hole count.
inline disc::Configuration random_config(int n, int holes, std::mt19937_64& rng) {
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::shuffle(vs.begin(), vs.end(), rng);
  std::vector<std::pair<disc::AgentLabel, int>> as;
  for (int i = 0; i < n; ++i)
    as.emplace_back(i < holes ? disc::AgentLabel::hole(i) : disc::AgentLabel::pebble(i - holes),
                    vs[i]);
  return disc::Configuration(n, as);
}

// Random instance: start config with `holes` holes and shuffled targets.
inline disc::Instance random_instance(const Digraph& d, int holes, std::mt19937_64& rng) {
  int n = d.vertex_count();
  disc::Instance inst;
  inst.digraph = d;
  inst.start = random_config(n, holes, rng);
  std::vector<int> ts(n);
  std::iota(ts.begin(), ts.end(), 0);
  std::shuffle(ts.begin(), ts.end(), rng);
  for (int i = 0; i < n - holes; ++i) inst.targets[i] = ts[i];
  return inst;
}

// Random valid plan of up to `len` moves starting at a.
inline disc::Plan random_plan(const Digraph& d, const disc::Configuration& a, int len,
                              std::mt19937_64& rng) {
  disc::Plan f;
  disc::Configuration c = a;
  for (int i = 0; i < len; ++i) {
    std::vector<disc::Move> opts;
    for (int v : c.hole_vertices())
      for (int u : d.in(v)) opts.push_back({u, v});
    if (opts.empty()) break;
    auto m = opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)];
    c.swap_vertices(m.from, m.to);
    f.push_back(m);
  }
  return f;
}

}  // namespace fx
