#include "disc/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

namespace disc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadInput: return "BadInput";
    case Errc::NotStronglyConnected: return "NotStronglyConnected";
    case Errc::NotStronglyBiconnected: return "NotStronglyBiconnected";
    case Errc::NotConnected: return "NotConnected";
    case Errc::VertexNotInComponent: return "VertexNotInComponent";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::TargetOccupied: return "TargetOccupied";
    case Errc::InvalidPlan: return "InvalidPlan";
    case Errc::VertexNotHole: return "VertexNotHole";
    case Errc::Unreachable: return "Unreachable";
    case Errc::NoHoleOnCycle: return "NoHoleOnCycle";
    case Errc::NoHoles: return "NoHoles";
    case Errc::TooFewHoles: return "TooFewHoles";
    case Errc::NotAttached: return "NotAttached";
    case Errc::WrongKind: return "WrongKind";
    case Errc::NotJoinedByArticulationPoint: return "NotJoinedByArticulationPoint";
    case Errc::InfeasibleInstance: return "InfeasibleInstance";
    case Errc::InfeasibleSwap: return "InfeasibleSwap";
    case Errc::InvalidIntermediate: return "InvalidIntermediate";
    case Errc::DegenerateParams: return "DegenerateParams";
    case Errc::TooManyAgents: return "TooManyAgents";
    case Errc::StateSpaceTooLarge: return "StateSpaceTooLarge";
  }
  return "Unknown";
}

namespace {

bool insert_sorted(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return false;
  v.insert(it, x);
  return true;
}

bool has_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n)
    throw Error(Errc::BadInput, "vertex " + std::to_string(v) + " out of range");
}

template <class NeighborFn>
std::vector<int> bfs_path(int n, int s, int t, const std::vector<char>& allowed,
                          NeighborFn nbrs) {
  if (s == t) return {s};
  std::vector<int> par(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<int> q{s};
  seen[s] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : nbrs(x)) {
      if (seen[y]) continue;
      if (!allowed.empty() && !allowed[y]) continue;
      seen[y] = 1;
      par[y] = x;
      if (y == t) {
        std::vector<int> path{t};
        while (path.back() != s) path.push_back(par[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(y);
    }
  }
  return {};
}

}  // namespace

Digraph::Digraph(int n) : n_(n), out_(n), in_(n) {
  if (n < 0) throw Error(Errc::BadInput, "negative vertex count");
}

Digraph::Digraph(int n, const std::vector<Edge>& edges) : Digraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Digraph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw Error(Errc::BadInput, "self loop at " + std::to_string(u));
  if (!insert_sorted(out_[u], v)) return false;
  insert_sorted(in_[v], u);
  ++m_;
  return true;
}

bool Digraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return has_sorted(out_[u], v);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> r;
  r.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) r.emplace_back(u, v);
  return r;
}

UndirectedGraph::UndirectedGraph(int n) : n_(n), adj_(n) {}

bool UndirectedGraph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw Error(Errc::BadInput, "self loop at " + std::to_string(u));
  if (!insert_sorted(adj_[u], v)) return false;
  insert_sorted(adj_[v], u);
  ++m_;
  return true;
}

bool UndirectedGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return has_sorted(adj_[u], v);
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> r;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) r.emplace_back(u, v);
  return r;
}

bool Component::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

int Cycle::index_of(int v) const {
  for (int i = 0; i < length(); ++i)
    if (ring[i] == v) return i;
  return -1;
}

int Cycle::succ(int v) const {
  int i = index_of(v);
  if (i < 0) return -1;
  return ring[(i + 1) % length()];
}

std::vector<int> shortest_path(const Digraph& d, int s, int t,
                               const std::vector<char>& allowed) {
  return bfs_path(d.vertex_count(), s, t, allowed,
                  [&](int x) -> const std::vector<int>& { return d.out(x); });
}

std::vector<int> shortest_path(const UndirectedGraph& g, int s, int t,
                               const std::vector<char>& allowed) {
  return bfs_path(g.vertex_count(), s, t, allowed,
                  [&](int x) -> const std::vector<int>& { return g.adj(x); });
}

UndirectedGraph underlying_graph(const Digraph& d) {
  UndirectedGraph g(d.vertex_count());
  for (auto [u, v] : d.edges()) g.add_edge(u, v);
  return g;
}

namespace {

// reachable set from s following out (forward) or in (backward) edges
std::vector<char> reach(const Digraph& d, int s, bool forward,
                        const std::vector<char>& allowed) {
  std::vector<char> seen(d.vertex_count(), 0);
  std::vector<int> st{s};
  seen[s] = 1;
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    const auto& nb = forward ? d.out(x) : d.in(x);
    for (int y : nb) {
      if (seen[y] || (!allowed.empty() && !allowed[y])) continue;
      seen[y] = 1;
      st.push_back(y);
    }
  }
  return seen;
}

bool strongly_connected_on(const Digraph& d, const std::vector<int>& verts) {
  if (verts.size() <= 1) return true;
  std::vector<char> allowed(d.vertex_count(), 0);
  for (int v : verts) allowed[v] = 1;
  auto f = reach(d, verts[0], true, allowed);
  auto b = reach(d, verts[0], false, allowed);
  for (int v : verts)
    if (!f[v] || !b[v]) return false;
  return true;
}

struct Blocks {
  std::vector<std::vector<int>> vertex_sets;
  std::vector<char> is_art;
};

// Hopcroft-Tarjan lowpoint, iterative, edge stack.
Blocks biconnected_blocks(const UndirectedGraph& g) {
  int n = g.vertex_count();
  Blocks out;
  out.is_art.assign(n, 0);
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<size_t> it(n, 0);
  std::vector<Edge> estack;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    int root_children = 0;
    std::vector<int> st{root};
    while (!st.empty()) {
      int u = st.back();
      if (it[u] < g.adj(u).size()) {
        int v = g.adj(u)[it[u]++];
        if (disc[v] == -1) {
          parent[v] = u;
          disc[v] = low[v] = timer++;
          estack.emplace_back(u, v);
          if (u == root) ++root_children;
          st.push_back(v);
        } else if (v != parent[u] && disc[v] < disc[u]) {
          low[u] = std::min(low[u], disc[v]);
          estack.emplace_back(u, v);
        }
        continue;
      }
      st.pop_back();
      int p = parent[u];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[u]);
      if (low[u] >= disc[p]) {
        if (p != root) out.is_art[p] = 1;
        std::set<int> verts;
        while (!estack.empty()) {
          Edge e = estack.back();
          estack.pop_back();
          verts.insert(e.first);
          verts.insert(e.second);
          if (e == Edge(p, u)) break;
        }
        out.vertex_sets.emplace_back(verts.begin(), verts.end());
      }
    }
    if (root_children > 1) out.is_art[root] = 1;
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> biconnected_vertex_sets(const UndirectedGraph& g) {
  auto b = biconnected_blocks(g);
  std::sort(b.vertex_sets.begin(), b.vertex_sets.end());
  return b.vertex_sets;
}

bool is_strongly_connected(const Digraph& d) {
  int n = d.vertex_count();
  if (n <= 1) return true;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return strongly_connected_on(d, all);
}

Component make_component(const Digraph& d, const std::vector<int>& vertices) {
  Component c;
  c.vertices = vertices;
  std::sort(c.vertices.begin(), c.vertices.end());
  c.sub = Digraph(d.vertex_count());
  for (int u : c.vertices)
    for (int v : d.out(u))
      if (c.contains(v)) {
        c.sub.add_edge(u, v);
        c.edges.emplace_back(u, v);
      }
  // kind only means something for strongly biconnected vertex sets
  if (c.vertices.size() >= 3 && c.edges.size() <= 2 * c.vertices.size()) {
    try {
      c.kind = classify_component(c);
    } catch (const Error&) {
    }
  }
  return c;
}

namespace {

// underlying edge count and biconnectivity of a component's own subgraph
void check_strongly_biconnected(const Component& c) {
  if (c.vertices.size() < 3)
    throw Error(Errc::NotStronglyBiconnected, "component has fewer than 3 vertices");
  if (!strongly_connected_on(c.sub, c.vertices))
    throw Error(Errc::NotStronglyBiconnected, "component is not strongly connected");
  UndirectedGraph g = underlying_graph(c.sub);
  Blocks b = biconnected_blocks(g);
  for (int v : c.vertices)
    if (b.is_art[v])
      throw Error(Errc::NotStronglyBiconnected,
                  "vertex " + std::to_string(v) + " cuts the component");
}

size_t underlying_edge_count(const Component& c) {
  std::set<Edge> s;
  for (auto [u, v] : c.edges) s.emplace(std::min(u, v), std::max(u, v));
  return s.size();
}

}  // namespace

ComponentKind classify_component(const Component& c) {
  check_strongly_biconnected(c);
  // biconnected with |E| = |V| is exactly a cycle
  if (underlying_edge_count(c) == c.vertices.size())
    return ComponentKind::PartiallyBidirectionalCycle;
  return ComponentKind::RegularOed;
}

Decomposition decompose(const Digraph& d) {
  if (!is_strongly_connected(d))
    throw Error(Errc::NotStronglyConnected, "decompose needs a strongly connected digraph");
  int n = d.vertex_count();
  UndirectedGraph g = underlying_graph(d);
  Blocks b = biconnected_blocks(g);
  Decomposition dec;
  dec.blocks_of.assign(n, {});
  std::sort(b.vertex_sets.begin(), b.vertex_sets.end());
  for (auto& vs : b.vertex_sets) {
    if (vs.size() < 3) {
      dec.bridges.emplace_back(vs[0], vs[1]);
      continue;
    }
    Component c = make_component(d, vs);
    c.kind = classify_component(c);
    int id = static_cast<int>(dec.components.size());
    for (int v : c.vertices) dec.blocks_of[v].push_back(id);
    dec.components.push_back(std::move(c));
  }
  for (int v = 0; v < n; ++v)
    if (b.is_art[v]) dec.articulation_points.push_back(v);
  std::sort(dec.bridges.begin(), dec.bridges.end());

  // corridors: chains of bridges glued at vertices of underlying degree two
  std::vector<std::vector<int>> bridge_adj(n);
  for (auto [u, v] : dec.bridges) {
    bridge_adj[u].push_back(v);
    bridge_adj[v].push_back(u);
  }
  auto interior = [&](int v) {
    return bridge_adj[v].size() == 2 && g.adj(v).size() == 2;
  };
  std::set<Edge> used;
  for (auto [u, v] : dec.bridges) {
    if (used.count({u, v})) continue;
    std::deque<int> chain{u, v};
    used.insert({u, v});
    auto extend = [&](bool back) {
      while (true) {
        int end = back ? chain.back() : chain.front();
        int prev = back ? chain[chain.size() - 2] : chain[1];
        if (!interior(end)) break;
        int nxt = bridge_adj[end][0] == prev ? bridge_adj[end][1] : bridge_adj[end][0];
        Edge e(std::min(end, nxt), std::max(end, nxt));
        if (used.count(e)) break;
        used.insert(e);
        if (back) chain.push_back(nxt);
        else chain.push_front(nxt);
      }
    };
    extend(true);
    extend(false);
    std::vector<int> cor(chain.begin(), chain.end());
    if (cor.front() > cor.back()) std::reverse(cor.begin(), cor.end());
    dec.corridors.push_back(std::move(cor));
  }
  std::sort(dec.corridors.begin(), dec.corridors.end());
  return dec;
}

bool is_directed_cycle(const Digraph& d, const Cycle& c) {
  int l = c.length();
  if (l < 2) return false;
  std::set<int> seen(c.ring.begin(), c.ring.end());
  if (static_cast<int>(seen.size()) != l) return false;
  for (int i = 0; i < l; ++i)
    if (!d.has_edge(c.ring[i], c.ring[(i + 1) % l])) return false;
  return true;
}

namespace {

// Orders the underlying cycle of a pb-cycle so that every forward edge exists.
Cycle pb_base_cycle(const Component& c) {
  UndirectedGraph g = underlying_graph(c.sub);
  int v0 = c.vertices.front();
  std::vector<int> ring{v0};
  int prev = v0, cur = g.adj(v0)[0];
  while (cur != v0) {
    ring.push_back(cur);
    int nxt = g.adj(cur)[0] == prev ? g.adj(cur)[1] : g.adj(cur)[0];
    prev = cur;
    cur = nxt;
  }
  Cycle cy{ring};
  if (!is_directed_cycle(c.sub, cy)) {
    std::reverse(cy.ring.begin() + 1, cy.ring.end());
  }
  return cy;
}

// Shortest ear leaving `attached` through unattached vertices, distinct ends.
std::vector<int> find_ear(const Component& c, const std::vector<char>& attached,
                          const std::vector<int>& sources) {
  int n = c.sub.vertex_count();
  std::vector<int> best;
  for (int s : sources) {
    std::vector<int> par(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<int> q{s};
    seen[s] = 1;
    std::vector<int> found;
    while (!q.empty() && found.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : c.sub.out(x)) {
        if (attached[y]) {
          if (x != s && y != s) {
            found = {y};
            for (int z = x; z != -1; z = par[z]) found.push_back(z);
            std::reverse(found.begin(), found.end());
            break;
          }
          continue;
        }
        if (x != s && x == y) continue;
        if (seen[y]) continue;
        seen[y] = 1;
        par[y] = x;
        q.push_back(y);
      }
    }
    if (!found.empty() && (best.empty() || found.size() < best.size())) best = found;
  }
  return best;
}

}  // namespace

EarDecomposition open_ear_decomposition(const Component& c) {
  ComponentKind kind = classify_component(c);
  int n = c.sub.vertex_count();
  EarDecomposition ed;
  std::set<Edge> used;
  std::vector<char> attached(n, 0);

  auto add_cycle = [&](const Cycle& cy) {
    ed.ears.push_back(Ear{cy.ring});
    for (int i = 0; i < cy.length(); ++i) {
      attached[cy.ring[i]] = 1;
      used.insert({cy.ring[i], cy.ring[(i + 1) % cy.length()]});
    }
  };

  if (kind == ComponentKind::PartiallyBidirectionalCycle) {
    add_cycle(pb_base_cycle(c));
  } else {
    // candidate basic cycles: through the smallest vertex first
    std::vector<Edge> cand;
    int v0 = c.vertices.front();
    for (int b : c.sub.out(v0)) cand.emplace_back(v0, b);
    for (auto e : c.edges)
      if (e.first != v0) cand.push_back(e);
    bool ok = false;
    for (auto [a, b] : cand) {
      std::vector<char> allowed(n, 0);
      for (int v : c.vertices) allowed[v] = 1;
      allowed[a] = 0;
      std::vector<int> back;
      // shortest b -> a path, a reached only at the end
      allowed[a] = 1;
      back = shortest_path(c.sub, b, a, allowed);
      if (back.size() < 2) continue;
      Cycle cy;
      cy.ring.push_back(a);
      for (size_t i = 0; i + 1 < back.size(); ++i) cy.ring.push_back(back[i]);
      if (cy.length() < 3) continue;
      std::vector<char> on(n, 0);
      for (int v : cy.ring) on[v] = 1;
      if (find_ear(c, on, cy.ring).empty()) continue;
      add_cycle(cy);
      ok = true;
      break;
    }
    if (!ok)
      throw Error(Errc::InvalidIntermediate, "no regular basic cycle found");
  }

  std::vector<int> attached_list;
  while (true) {
    attached_list.clear();
    for (int v : c.vertices)
      if (attached[v]) attached_list.push_back(v);
    if (attached_list.size() == c.vertices.size()) break;
    std::vector<int> ear = find_ear(c, attached, attached_list);
    if (ear.empty())
      throw Error(Errc::InvalidIntermediate, "greedy ear search got stuck");
    ed.ears.push_back(Ear{ear});
    for (size_t i = 0; i + 1 < ear.size(); ++i) used.insert({ear[i], ear[i + 1]});
    for (int v : ear) attached[v] = 1;
  }
  for (auto e : c.edges)
    if (!used.count(e)) ed.ears.push_back(Ear{{e.first, e.second}});

  ed.is_open = true;
  ed.is_regular = false;
  if (ed.ears[0].path.size() >= 3) {
    std::vector<char> on0(n, 0);
    for (int v : ed.ears[0].path) on0[v] = 1;
    for (size_t i = 1; i < ed.ears.size(); ++i)
      if (!ed.ears[i].trivial() && on0[ed.ears[i].start()] && on0[ed.ears[i].end()])
        ed.is_regular = true;
  }
  return ed;
}

bool ear_decomposition_valid(const Component& c, const EarDecomposition& ed) {
  if (ed.ears.empty()) return false;
  int n = c.sub.vertex_count();
  Cycle l0{ed.ears[0].path};
  if (!is_directed_cycle(c.sub, l0)) return false;
  std::vector<char> attached(n, 0);
  std::set<Edge> used;
  for (int i = 0; i < l0.length(); ++i) {
    attached[l0.ring[i]] = 1;
    used.insert({l0.ring[i], l0.ring[(i + 1) % l0.length()]});
  }
  for (size_t k = 1; k < ed.ears.size(); ++k) {
    const auto& p = ed.ears[k].path;
    if (p.size() < 2) return false;
    if (!attached[p.front()] || !attached[p.back()]) return false;
    if (p.front() == p.back()) return false;  // open
    for (size_t i = 1; i + 1 < p.size(); ++i)
      if (attached[p[i]]) return false;
    std::set<int> distinct(p.begin(), p.end());
    if (distinct.size() != p.size()) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      Edge e(p[i], p[i + 1]);
      if (!c.sub.has_edge(e.first, e.second) || used.count(e)) return false;
      used.insert(e);
    }
    for (int v : p) attached[v] = 1;
  }
  for (int v : c.vertices)
    if (!attached[v]) return false;
  if (used.size() != c.edges.size()) return false;
  if (ed.is_regular) {
    if (l0.length() < 3) return false;
    bool found = false;
    for (size_t k = 1; k < ed.ears.size(); ++k) {
      const auto& e = ed.ears[k];
      if (!e.trivial() && l0.contains(e.start()) && l0.contains(e.end())) found = true;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

// Closes ear k into a cycle through vertices attached before it.
Cycle close_ear(const Component& c, const EarDecomposition& ed, size_t k) {
  if (k == 0) return Cycle{ed.ears[0].path};
  int n = c.sub.vertex_count();
  std::vector<char> allowed(n, 0);
  for (size_t i = 0; i < k; ++i)
    for (int v : ed.ears[i].path) allowed[v] = 1;
  const auto& p = ed.ears[k].path;
  for (size_t i = 1; i + 1 < p.size(); ++i) allowed[p[i]] = 0;
  auto back = shortest_path(c.sub, p.back(), p.front(), allowed);
  Cycle cy{p};
  for (size_t i = 1; i + 1 < back.size(); ++i) cy.ring.push_back(back[i]);
  return cy;
}

std::vector<Edge> ring_edges(const Cycle& c) {
  std::vector<Edge> r;
  for (int i = 0; i < c.length(); ++i) r.emplace_back(c.ring[i], c.ring[(i + 1) % c.length()]);
  return r;
}

Edge shared_edge(const Cycle& a, const Cycle& b, int fallback) {
  auto ea = ring_edges(a);
  auto eb = ring_edges(b);
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  std::vector<Edge> both;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(both));
  if (both.empty()) return {fallback, fallback};
  return both.front();
}

}  // namespace

CycleSequence cycle_sequence(const Component& c, const EarDecomposition& ed, int v, int w) {
  if (!c.contains(v) || !c.contains(w))
    throw Error(Errc::VertexNotInComponent, "cycle_sequence endpoint outside component");
  auto ear_with_edge = [&](int a, int b) -> size_t {
    for (size_t k = 0; k < ed.ears.size(); ++k) {
      const auto& p = ed.ears[k].path;
      size_t m = p.size();
      for (size_t i = 0; i + 1 < m; ++i)
        if (p[i] == a && p[i + 1] == b) return k;
      if (k == 0 && p.back() == a && p.front() == b) return k;
    }
    return ed.ears.size();
  };
  CycleSequence cs;
  if (v == w) {
    for (size_t k = 0; k < ed.ears.size(); ++k) {
      const auto& p = ed.ears[k].path;
      if (std::find(p.begin(), p.end(), v) != p.end()) {
        cs.cycles.push_back(close_ear(c, ed, k));
        return cs;
      }
    }
    throw Error(Errc::VertexNotInComponent, "vertex not covered by ears");
  }
  auto pi = shortest_path(c.sub, v, w);
  if (pi.empty()) throw Error(Errc::Unreachable, "no path inside component");
  size_t k0 = ear_with_edge(pi[0], pi[1]);
  if (k0 == ed.ears.size()) throw Error(Errc::InvalidIntermediate, "edge not in any ear");
  cs.cycles.push_back(close_ear(c, ed, k0));
  int n = c.sub.vertex_count();
  for (size_t j = 2; j < pi.size(); ++j) {
    if (cs.cycles.back().contains(pi[j])) continue;
    int a = pi[j - 2], b = pi[j - 1], u = pi[j];
    std::vector<char> allowed(n, 0);
    for (int x : c.vertices) allowed[x] = 1;
    allowed[b] = 0;
    auto back = shortest_path(c.sub, u, a, allowed);
    Cycle cy;
    if (!back.empty()) {
      cy.ring = {a, b};
      for (size_t i = 0; i + 1 < back.size(); ++i) cy.ring.push_back(back[i]);
    } else {
      // no return avoiding b: close through b itself
      auto back2 = shortest_path(c.sub, u, b);
      cy.ring = {b};
      for (size_t i = 0; i + 1 < back2.size(); ++i) cy.ring.push_back(back2[i]);
    }
    cs.links.push_back(shared_edge(cs.cycles.back(), cy, b));
    cs.cycles.push_back(std::move(cy));
  }
  // drop cycles before the last one holding v, and after the first holding w
  size_t first = 0;
  for (size_t i = 0; i < cs.cycles.size(); ++i)
    if (cs.cycles[i].contains(v)) first = i;
  size_t last = cs.cycles.size() - 1;
  for (size_t i = first; i < cs.cycles.size(); ++i)
    if (cs.cycles[i].contains(w)) {
      last = i;
      break;
    }
  CycleSequence out;
  for (size_t i = first; i <= last; ++i) {
    out.cycles.push_back(cs.cycles[i]);
    if (i < last) out.links.push_back(cs.links[i]);
  }
  return out;
}

}  // namespace disc
