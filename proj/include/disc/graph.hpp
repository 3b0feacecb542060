#pragma once

#include <utility>
#include <vector>

#include "disc/error.hpp"

namespace disc {

using Edge = std::pair<int, int>;

// Directed graph on vertices 0..n-1. Edge set semantics, no self loops.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  // Returns false when the edge was already present.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> out_, in_;  // kept sorted
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& adj(int v) const { return adj_[v]; }
  // Each edge once, as (min, max), sorted.
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

enum class ComponentKind { PartiallyBidirectionalCycle, RegularOed };

struct Component {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // induced directed edges
  ComponentKind kind = ComponentKind::RegularOed;
  Digraph sub;                // global ids, only the induced edges

  bool contains(int v) const;
};

struct Decomposition {
  std::vector<Component> components;        // non-trivial blocks only
  std::vector<int> articulation_points;     // sorted
  std::vector<std::vector<int>> corridors;  // bidirectional chains
  std::vector<Edge> bridges;                // trivial blocks, (min,max)
  // block ids per vertex (index into components)
  std::vector<std::vector<int>> blocks_of;
};

struct Ear {
  std::vector<int> path;  // vertex sequence; for L_0 the closing vertex is implied
  int start() const { return path.front(); }
  int end() const { return path.back(); }
  bool trivial() const { return path.size() == 2; }
};

struct EarDecomposition {
  std::vector<Ear> ears;  // ears[0] is the basic cycle
  bool is_open = true;
  bool is_regular = false;
};

// A simple directed cycle, listed in traversal order.
struct Cycle {
  std::vector<int> ring;
  int length() const { return static_cast<int>(ring.size()); }
  int index_of(int v) const;
  int succ(int v) const;
  bool contains(int v) const { return index_of(v) >= 0; }
};

struct CycleSequence {
  std::vector<Cycle> cycles;
  std::vector<Edge> links;  // links[j] joins cycles[j] and cycles[j+1]
};

UndirectedGraph underlying_graph(const Digraph& d);
bool is_strongly_connected(const Digraph& d);
Decomposition decompose(const Digraph& d);
ComponentKind classify_component(const Component& c);
EarDecomposition open_ear_decomposition(const Component& c);
CycleSequence cycle_sequence(const Component& c, const EarDecomposition& ed, int v, int w);

// helpers used across modules

// Component built from a vertex subset of d (induced edges).
Component make_component(const Digraph& d, const std::vector<int>& vertices);
// BFS shortest path from s to t inside the allowed mask (empty mask = all).
// Smallest id wins ties. Empty result when unreachable.
std::vector<int> shortest_path(const Digraph& d, int s, int t,
                               const std::vector<char>& allowed = {});
std::vector<int> shortest_path(const UndirectedGraph& g, int s, int t,
                               const std::vector<char>& allowed = {});
// Vertex sets of all biconnected blocks (bridges included), sorted.
std::vector<std::vector<int>> biconnected_vertex_sets(const UndirectedGraph& g);
// Checks the ear invariants; used by tests and by the constructor itself.
bool ear_decomposition_valid(const Component& c, const EarDecomposition& ed);
bool is_directed_cycle(const Digraph& d, const Cycle& c);

}  // namespace disc
