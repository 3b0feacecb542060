#include "disc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "disc/sbd.hpp"
#include "disc/tree.hpp"

namespace disc {

const char* outcome_name(SolveOutcome::Kind k) {
  switch (k) {
    case SolveOutcome::Kind::Feasible: return "feasible";
    case SolveOutcome::Kind::Infeasible: return "infeasible";
    case SolveOutcome::Kind::Unsupported: return "unsupported";
  }
  return "?";
}

void validate_instance(const Instance& inst) {
  int n = inst.digraph.vertex_count();
  if (inst.start.vertex_count() != n)
    throw Error(Errc::BadInput, "configuration size does not match the graph");
  std::set<int> used;
  for (auto& [p, v] : inst.targets) {
    if (v < 0 || v >= n) throw Error(Errc::BadInput, "target outside the graph");
    if (!used.insert(v).second) throw Error(Errc::BadInput, "two pebbles share a target");
    if (inst.start.pebble_position(p) < 0)
      throw Error(Errc::BadInput, "target for unknown pebble " + std::to_string(p));
  }
  if (static_cast<int>(inst.targets.size()) != inst.start.pebble_count())
    throw Error(Errc::BadInput, "every pebble needs a target");
}

namespace {

bool all_home(const Instance& inst) {
  for (auto& [p, v] : inst.targets)
    if (inst.start.pebble_position(p) != v) return false;
  return true;
}

bool is_cycle_graph(const UndirectedGraph& g) {
  int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (int v = 0; v < n; ++v)
    if (g.adj(v).size() != 2) return false;
  return true;
}

// Vertices of a cycle graph in walking order.
std::vector<int> cycle_order(const UndirectedGraph& g, const std::vector<int>& verts) {
  std::set<int> in(verts.begin(), verts.end());
  std::vector<int> ring{verts.front()};
  int prev = -1, cur = verts.front();
  while (true) {
    int nxt = -1;
    for (int y : g.adj(cur))
      if (in.count(y) && y != prev) {
        nxt = y;
        break;
      }
    if (nxt < 0 || nxt == verts.front()) break;
    ring.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return ring;
}

bool bipartite(const UndirectedGraph& g, const std::vector<int>& verts) {
  std::unordered_map<int, int> col;
  std::set<int> in(verts.begin(), verts.end());
  for (int s : verts) {
    if (col.count(s)) continue;
    col[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : g.adj(x)) {
        if (!in.count(y)) continue;
        auto it = col.find(y);
        if (it == col.end()) {
          col[y] = col[x] ^ 1;
          q.push_back(y);
        } else if (it->second == col[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Same cyclic sequence up to rotation.
bool rotation_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t s = 0; s < b.size(); ++s) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + s) % b.size()];
    if (ok) return true;
  }
  return false;
}

// Small blocks: explore every arrangement reachable with the hole parked at b.
bool block_reachable(const UndirectedGraph& g, const std::vector<int>& block, int b,
                     const std::vector<int>& from, const std::vector<int>& to) {
  int m = static_cast<int>(block.size());
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && g.has_edge(block[i], block[j])) adj[i].push_back(j);
  auto key = [&](const std::vector<int>& occ) {
    std::vector<int> k(m);
    for (int i = 0; i < m; ++i) k[i] = block[i] == b ? -1 : occ[block[i]];
    return k;
  };
  std::vector<int> s = key(from), goal = key(to);
  std::set<std::vector<int>> seen{s};
  std::deque<std::vector<int>> q{s};
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    if (x == goal) return true;
    int h = static_cast<int>(std::find(x.begin(), x.end(), -1) - x.begin());
    for (int y : adj[h]) {
      auto z = x;
      std::swap(z[h], z[y]);
      if (seen.insert(z).second) q.push_back(z);
    }
  }
  return false;
}

int parity(const std::vector<int>& from, const std::vector<int>& to) {
  // permutation taking the list `from` to `to` (same elements)
  std::unordered_map<int, int> idx;
  for (size_t i = 0; i < to.size(); ++i) idx[to[i]] = static_cast<int>(i);
  std::vector<int> perm(from.size());
  for (size_t i = 0; i < from.size(); ++i) perm[i] = idx[from[i]];
  std::vector<char> seen(perm.size(), 0);
  int par = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    par ^= (len - 1) & 1;
  }
  return par;
}

// One hole: park it on the free target vertex y, then each block with entry
// b (closest vertex to y) must hold the right pebbles on B - b, permuted by
// an element of that block's puzzle group.
bool one_hole_feasible(const UndirectedGraph& g, std::vector<int> occ,
                       const std::map<int, int>& targets) {
  int n = g.vertex_count();
  std::vector<int> tgt(n, -1);
  for (auto& [p, v] : targets) tgt[v] = p;
  int y = static_cast<int>(std::find(tgt.begin(), tgt.end(), -1) - tgt.begin());
  int x = static_cast<int>(std::find(occ.begin(), occ.end(), -1) - occ.begin());
  auto path = shortest_path(g, x, y);
  for (size_t i = 0; i + 1 < path.size(); ++i) occ[path[i]] = occ[path[i + 1]];
  occ[y] = -1;

  std::vector<int> dist(n, -1);
  std::deque<int> q{y};
  dist[y] = 0;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int b : g.adj(a))
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        q.push_back(b);
      }
  }
  for (auto& block : biconnected_vertex_sets(g)) {
    int b = *std::min_element(block.begin(), block.end(),
                              [&](int u, int v) { return dist[u] < dist[v]; });
    std::vector<int> rest;
    for (int v : block)
      if (v != b) rest.push_back(v);
    std::multiset<int> have, want;
    for (int v : rest) {
      have.insert(occ[v]);
      want.insert(tgt[v]);
    }
    if (have != want) return false;
    bool same = true;
    for (int v : rest) same = same && occ[v] == tgt[v];
    if (same) continue;
    int m = static_cast<int>(block.size());
    if (m == 2) return false;
    int edges = 0;
    for (int u : block)
      for (int v : g.adj(u))
        if (u < v && std::binary_search(block.begin(), block.end(), v)) ++edges;
    if (edges == m) {
      auto ring = cycle_order(g, block);
      auto at = std::find(ring.begin(), ring.end(), b) - ring.begin();
      std::vector<int> sa, sb;
      for (int i = 1; i < m; ++i) {
        int v = ring[(at + i) % m];
        sa.push_back(occ[v]);
        sb.push_back(tgt[v]);
      }
      if (!rotation_equal(sa, sb)) return false;
      continue;
    }
    if (m <= 7) {
      if (!block_reachable(g, block, b, occ, tgt)) return false;
      continue;
    }
    if (bipartite(g, block)) {
      std::vector<int> sa, sb;
      for (int v : rest) {
        sa.push_back(occ[v]);
        sb.push_back(tgt[v]);
      }
      if (parity(sa, sb)) return false;
    }
  }
  return true;
}

}  // namespace

bool check_feasibility(const Instance& inst) {
  validate_instance(inst);
  const Digraph& d = inst.digraph;
  if (!is_strongly_connected(d))
    throw Error(Errc::NotStronglyConnected, "feasibility needs a strongly connected digraph");
  if (all_home(inst)) return true;
  int h = inst.start.hole_count();
  if (h == 0) return false;
  auto g = underlying_graph(d);
  if (is_cycle_graph(g)) {
    std::vector<int> all(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) all[v] = v;
    return cyclic_order_matches(cycle_order(g, all), inst.start, inst.targets);
  }
  TreeConfig lifted = lift_config(inst.start);
  if (h == 1) return one_hole_feasible(g, lifted.occ, inst.targets);
  return pmt_feasible(build_bct(g), lifted, inst.targets);
}

bool verify(const Instance& inst, const Plan& f, std::string* why) {
  Configuration c;
  try {
    c = apply_plan(inst.start, f, inst.digraph);
  } catch (const Error& e) {
    if (why) *why = e.what();
    return false;
  }
  for (auto& [p, v] : inst.targets)
    if (c.pebble_position(p) != v) {
      if (why) *why = "pebble " + std::to_string(p) + " ends on " +
                      std::to_string(c.pebble_position(p)) + ", target " + std::to_string(v);
      return false;
    }
  return true;
}

Plan compress(const Plan& f, const Instance& inst) {
  if (!verify(inst, f)) return f;
  int n = inst.digraph.vertex_count();
  std::vector<char> peb(n, 0);
  for (int v = 0; v < n; ++v) peb[v] = !inst.start.is_hole(v);
  Plan out;
  for (auto m : f) {
    if (!peb[m.from]) continue;  // hole onto hole: invisible to pebbles
    if (!out.empty() && out.back().from == m.to && out.back().to == m.from) {
      out.pop_back();
      std::swap(peb[m.from], peb[m.to]);
      continue;
    }
    out.push_back(m);
    std::swap(peb[m.from], peb[m.to]);
  }
  if (!verify(inst, out) || out.size() > f.size()) return f;
  return out;
}

SolveOutcome solve(const Instance& inst) {
  auto t0 = std::chrono::steady_clock::now();
  validate_instance(inst);
  const Digraph& d = inst.digraph;
  if (!is_strongly_connected(d))
    throw Error(Errc::NotStronglyConnected, "solve needs a strongly connected digraph");
  SolveOutcome out;
  auto done = [&]() {
    out.stats.moves = static_cast<long long>(out.plan.size());
    out.stats.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
    if (out.feasible()) {
      std::string why;
      if (!verify(inst, out.plan, &why))
        throw Error(Errc::InvalidIntermediate, "solver produced a bad plan: " + why);
    }
    return out;
  };
  if (all_home(inst)) {
    out.kind = SolveOutcome::Kind::Feasible;
    return done();
  }
  int h = inst.start.hole_count();
  auto g = underlying_graph(d);
  if (is_cycle_graph(g)) {
    if (h == 0) {
      out.kind = SolveOutcome::Kind::Infeasible;
      out.reason = "no holes";
      return done();
    }
    std::vector<int> all(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) all[v] = v;
    auto p = solve_pb_cycle(make_component(d, all), inst.start, inst.targets);
    if (!p) {
      out.kind = SolveOutcome::Kind::Infeasible;
      out.reason = "pebble order around the cycle differs from the target order";
      return done();
    }
    out.kind = SolveOutcome::Kind::Feasible;
    out.plan = std::move(*p);
    return done();
  }
  if (!check_feasibility(inst)) {
    out.kind = SolveOutcome::Kind::Infeasible;
    out.reason = h == 0 ? "no holes" : "targets need a permutation the graph cannot realise";
    return done();
  }
  if (h < 2) {
    out.kind = SolveOutcome::Kind::Unsupported;
    out.reason = "feasible, but the constructive solver needs at least 2 holes";
    return done();
  }
  auto dec = decompose(d);
  auto t = build_bct(g);
  TreeConfig lifted = lift_config(inst.start);
  auto [prefix, after] = pmt_to_ppt(t, lifted, inst.targets);
  TreePlan tp = prefix;
  auto rest = ppt_solve(t, after, inst.targets);
  tp.insert(tp.end(), rest.begin(), rest.end());
  out.plan = convert_path(tp, d, dec, t, inst.start);
  out.kind = SolveOutcome::Kind::Feasible;
  return done();
}

}  // namespace disc
