#include "disc/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace disc {

int BctTree::star_between(int u, int v) const {
  for (int s : adj[u]) {
    if (!is_trans(s)) continue;
    const auto& l = star(s);
    if (std::binary_search(l.begin(), l.end(), v)) return s;
  }
  return -1;
}

std::vector<Edge> BctTree::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

BctTree build_bct(const UndirectedGraph& g) {
  int n = g.vertex_count();
  {
    std::vector<char> seen(n, 0);
    std::vector<int> st;
    int cnt = 0;
    if (n > 0) {
      st.push_back(0);
      seen[0] = 1;
      cnt = 1;
    }
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : g.adj(x))
        if (!seen[y]) {
          seen[y] = 1;
          ++cnt;
          st.push_back(y);
        }
    }
    if (cnt != n) throw Error(Errc::NotConnected, "graph is not connected");
  }
  BctTree t;
  t.original_count = n;
  t.adj.assign(n, {});
  for (auto& vs : biconnected_vertex_sets(g)) {
    if (vs.size() < 3) {
      t.adj[vs[0]].push_back(vs[1]);
      t.adj[vs[1]].push_back(vs[0]);
      continue;
    }
    int s = static_cast<int>(t.adj.size());
    t.adj.emplace_back(vs);
    for (int v : vs) t.adj[v].push_back(s);
    t.leaves.push_back(vs);
  }
  for (auto& a : t.adj) std::sort(a.begin(), a.end());
  t.kadj.assign(n, {});
  for (int v = 0; v < n; ++v) {
    auto& k = t.kadj[v];
    for (int x : t.adj[v]) {
      if (!t.is_trans(x)) k.push_back(x);
      else
        for (int y : t.star(x))
          if (y != v) k.push_back(y);
    }
    std::sort(k.begin(), k.end());
  }
  return t;
}

std::string dump_tree(const BctTree& t) {
  std::ostringstream os;
  for (int s = t.original_count; s < t.vertex_count(); ++s) os << "t " << s << "\n";
  for (auto [u, v] : t.edges()) os << "e " << u << " " << v << "\n";
  return os.str();
}

int TreeConfig::hole_count() const {
  return static_cast<int>(std::count(occ.begin(), occ.end(), -1));
}

TreeConfig lift_config(const Configuration& a) {
  TreeConfig c;
  c.occ.assign(a.vertex_count(), -1);
  for (int v = 0; v < a.vertex_count(); ++v)
    if (!a.is_hole(v)) c.occ[v] = a.at(v).id;
  return c;
}

void apply_tree_move(const BctTree& t, TreeConfig& c, const TreeMove& m, int index) {
  auto bad = [&](const std::string& why) {
    throw Error(Errc::InvalidPlan,
                "tree move " + std::to_string(m.from) + "->" + std::to_string(m.to) + ": " + why,
                index);
  };
  int n = t.original_count;
  if (m.from < 0 || m.from >= n || m.to < 0 || m.to >= n || m.from == m.to) bad("bad endpoints");
  if (m.through_star()) {
    if (!t.is_trans(m.via) || m.via >= t.vertex_count()) bad("not a trans-shipment vertex");
    const auto& l = t.star(m.via);
    if (!std::binary_search(l.begin(), l.end(), m.from) ||
        !std::binary_search(l.begin(), l.end(), m.to))
      bad("endpoints not on the star");
  } else if (!std::binary_search(t.adj[m.from].begin(), t.adj[m.from].end(), m.to)) {
    bad("no tree edge");
  }
  if (c.occ[m.to] != -1) bad("target occupied");
  std::swap(c.occ[m.from], c.occ[m.to]);
}

TreeConfig apply_tree_plan(const BctTree& t, const TreeConfig& c, const TreePlan& p) {
  TreeConfig r = c;
  for (size_t i = 0; i < p.size(); ++i) apply_tree_move(t, r, p[i], static_cast<int>(i));
  return r;
}

namespace {

// Tree rooted at vertex 0 with binary lifting.
struct Rooted {
  const BctTree& t;
  int N, LOG = 1;
  std::vector<int> parent, depth, dorig, tin, tout, order;
  std::vector<std::vector<int>> up;

  explicit Rooted(const BctTree& tr) : t(tr), N(tr.vertex_count()) {
    while ((1 << LOG) < N) ++LOG;
    parent.assign(N, -1);
    depth.assign(N, 0);
    dorig.assign(N, 0);
    tin.assign(N, 0);
    tout.assign(N, 0);
    int timer = 0;
    std::vector<std::pair<int, size_t>> st{{0, 0}};
    tin[0] = timer++;
    dorig[0] = 1;
    order.push_back(0);
    while (!st.empty()) {
      auto& [x, i] = st.back();
      if (i < t.adj[x].size()) {
        int y = t.adj[x][i++];
        if (y == parent[x]) continue;
        parent[y] = x;
        depth[y] = depth[x] + 1;
        dorig[y] = dorig[x] + (t.is_trans(y) ? 0 : 1);
        tin[y] = timer++;
        order.push_back(y);
        st.push_back({y, 0});
      } else {
        tout[x] = timer;
        st.pop_back();
      }
    }
    up.assign(LOG + 1, std::vector<int>(N, 0));
    for (int v = 0; v < N; ++v) up[0][v] = parent[v] < 0 ? v : parent[v];
    for (int k = 1; k <= LOG; ++k)
      for (int v = 0; v < N; ++v) up[k][v] = up[k - 1][up[k - 1][v]];
  }

  bool in_sub(int u, int c) const { return tin[u] <= tin[c] && tin[c] < tout[u]; }

  int ancestor_at(int v, int dep) const {
    for (int k = LOG; k >= 0; --k)
      if (depth[v] - (1 << k) >= dep) v = up[k][v];
    return v;
  }

  int lca(int u, int v) const {
    if (in_sub(u, v)) return u;
    if (in_sub(v, u)) return v;
    for (int k = LOG; k >= 0; --k)
      if (!in_sub(up[k][u], v)) u = up[k][u];
    return parent[u];
  }

  int dist(int u, int v) const { return depth[u] + depth[v] - 2 * depth[lca(u, v)]; }

  // original vertices on the tree path u..v, both ends included
  int origs(int u, int v) const {
    int l = lca(u, v);
    return dorig[u] + dorig[v] - 2 * dorig[l] + (t.is_trans(l) ? 0 : 1);
  }
};

// Per-configuration hole counts over subtrees.
struct HoleIndex {
  const Rooted& r;
  std::vector<int> sub;
  int total = 0;

  HoleIndex(const Rooted& rt, const TreeConfig& c) : r(rt), sub(rt.N, 0) {
    for (int v = 0; v < r.t.original_count; ++v)
      if (c.occ[v] == -1) {
        sub[v] = 1;
        ++total;
      }
    for (size_t i = r.order.size(); i-- > 1;) sub[r.parent[r.order[i]]] += sub[r.order[i]];
  }

  // holes in the component of T - u holding c (c != u)
  int comp(int u, int c) const {
    if (r.in_sub(u, c)) return sub[r.ancestor_at(c, r.depth[u] + 1)];
    return total - sub[u];
  }
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int k_degree(const BctTree& t, int v) { return static_cast<int>(t.kadj[v].size()); }

bool k_adjacent(const BctTree& t, int u, int v) {
  return std::binary_search(t.kadj[u].begin(), t.kadj[u].end(), v);
}

// Pebbles that can meet at a common swap site end up in one class; the
// reachable permutations are exactly those that respect the classes.
std::vector<int> pebble_classes(const BctTree& t, const TreeConfig& c) {
  Rooted r(t);
  HoleIndex hi(r, c);
  int n = t.original_count;
  std::vector<int> where;  // positions of the pebbles
  for (int v = 0; v < n; ++v)
    if (c.occ[v] != -1) where.push_back(v);
  int k = static_cast<int>(where.size());
  UnionFind uf(k);
  std::vector<int> vis;
  auto link = [&]() {
    for (size_t i = 1; i < vis.size(); ++i) uf.unite(vis[0], vis[i]);
  };
  // cliques: one hole inside the block is enough
  for (int s = n; s < t.vertex_count(); ++s) {
    vis.clear();
    const auto& l = t.star(s);
    for (int i = 0; i < k; ++i) {
      int u = where[i];
      int need = std::binary_search(l.begin(), l.end(), u) ? 1 : r.origs(u, s);
      if (hi.comp(u, s) >= need) vis.push_back(i);
    }
    link();
  }
  // junctions: a vertex with three block graph neighbours and two holes
  for (int j = 0; j < n; ++j) {
    if (k_degree(t, j) < 3) continue;
    vis.clear();
    for (int i = 0; i < k; ++i) {
      int u = where[i];
      bool ok;
      if (u == j) {
        int supply = 0;
        for (int x : t.adj[j]) {
          int h = x == r.parent[j] ? hi.total - hi.sub[j] : hi.sub[x];
          int room = t.is_trans(x) ? static_cast<int>(t.star(x).size()) - 1 : 1;
          supply += std::min(h, room);
        }
        ok = supply >= 2;
      } else if (k_adjacent(t, u, j)) {
        ok = hi.comp(u, j) >= 2;
      } else {
        ok = hi.comp(u, j) >= r.origs(u, j);
      }
      if (ok) vis.push_back(i);
    }
    link();
  }
  std::vector<int> cls(n, -1);
  for (int i = 0; i < k; ++i) cls[where[i]] = uf.find(i);
  return cls;  // class per vertex of the pebble sitting there
}

// BFS over T from `from` to the nearest original vertex satisfying `goal`,
// never entering a blocked original vertex. Returns original vertices only.
template <class Goal>
std::vector<int> tree_path(const BctTree& t, int from, Goal goal, const std::vector<char>& blocked) {
  int N = t.vertex_count();
  std::vector<int> par(N, -2);
  std::deque<int> q{from};
  par[from] = -1;
  int hit = -1;
  while (!q.empty() && hit < 0) {
    int x = q.front();
    q.pop_front();
    for (int y : t.adj[x]) {
      if (par[y] != -2) continue;
      if (!t.is_trans(y) && !blocked.empty() && blocked[y]) continue;
      par[y] = x;
      if (!t.is_trans(y) && goal(y)) {
        hit = y;
        break;
      }
      q.push_back(y);
    }
  }
  if (hit < 0) return {};
  std::vector<int> path;
  for (int x = hit; x >= 0; x = par[x])
    if (!t.is_trans(x)) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

TreeMove kmove(const BctTree& t, int u, int v) {
  int s = t.star_between(u, v);
  return TreeMove{u, s, v};
}

struct Mover {
  const BctTree& t;
  TreeConfig c;
  TreePlan plan;

  void move(int u, int v) {
    TreeMove m = kmove(t, u, v);
    apply_tree_move(t, c, m);
    plan.push_back(m);
  }

  // path[0] occupied ... path.back() empty; pushes the chain forward so the
  // far end gets filled and path[0] is vacated
  void chain_shift(const std::vector<int>& path) {
    std::vector<int> occ_idx;
    int m = static_cast<int>(path.size()) - 1;
    for (int i = 0; i < m; ++i)
      if (c.occ[path[i]] != -1) occ_idx.push_back(i);
    for (size_t k = occ_idx.size(); k-- > 0;) {
      int dst = k + 1 < occ_idx.size() ? occ_idx[k + 1] : m;
      for (int j = occ_idx[k]; j < dst; ++j) move(path[j], path[j + 1]);
    }
  }

  // Empties w by pushing its pebble (and those behind it) toward the
  // nearest hole. Protected vertices are never touched.
  bool clear(int w, const std::vector<char>& prot) {
    if (c.occ[w] == -1) return true;
    auto path = tree_path(t, w, [&](int y) { return c.occ[y] == -1; }, prot);
    if (path.empty()) return false;
    for (size_t i = path.size() - 1; i-- > 0;) move(path[i], path[i + 1]);
    return true;
  }
};

std::vector<int> targets_by_depth(const BctTree& t, const std::map<int, int>& targets) {
  Rooted r(t);
  std::vector<int> vs;
  for (auto& [p, v] : targets) vs.push_back(v);
  std::sort(vs.begin(), vs.end(), [&](int a, int b) {
    if (r.depth[a] != r.depth[b]) return r.depth[a] > r.depth[b];
    return a < b;
  });
  return vs;
}

void check_targets(const BctTree& t, const TreeConfig& c, const std::map<int, int>& targets) {
  std::set<int> used;
  int pebbles = 0;
  for (int x : c.occ)
    if (x != -1) ++pebbles;
  for (auto& [p, v] : targets) {
    if (v < 0 || v >= t.original_count) throw Error(Errc::BadInput, "target outside the tree");
    if (!used.insert(v).second) throw Error(Errc::BadInput, "two pebbles share a target");
  }
  if (static_cast<int>(targets.size()) != pebbles)
    throw Error(Errc::BadInput, "every pebble needs exactly one target");
  for (int x : c.occ)
    if (x != -1 && !targets.count(x)) throw Error(Errc::BadInput, "pebble without target");
}

}  // namespace

std::pair<TreePlan, TreeConfig> pmt_to_ppt(const BctTree& t, const TreeConfig& start,
                                           const std::map<int, int>& targets) {
  check_targets(t, start, targets);
  int n = t.original_count;
  std::vector<char> is_target(n, 0);
  for (auto& [p, v] : targets) is_target[v] = 1;
  Mover mv{t, start, {}};
  for (int tv : targets_by_depth(t, targets)) {
    if (mv.c.occ[tv] != -1) continue;
    auto path = tree_path(
        t, tv, [&](int y) { return mv.c.occ[y] != -1 && !is_target[y]; }, {});
    if (path.empty()) throw Error(Errc::InfeasibleInstance, "no pebble left to route");
    std::reverse(path.begin(), path.end());
    mv.chain_shift(path);
  }
  return {mv.plan, mv.c};
}

bool pmt_feasible(const BctTree& t, const TreeConfig& start, const std::map<int, int>& targets) {
  check_targets(t, start, targets);
  bool home = true;
  for (auto& [p, v] : targets)
    if (start.occ[v] != p) home = false;
  if (home) return true;
  if (start.hole_count() == 0) return false;
  auto cls = pebble_classes(t, start);
  std::unordered_map<int, int> cls_of;
  for (int v = 0; v < t.original_count; ++v)
    if (start.occ[v] != -1) cls_of[start.occ[v]] = cls[v];
  auto [prefix, after] = pmt_to_ppt(t, start, targets);
  for (auto& [p, v] : targets)
    if (cls_of[after.occ[v]] != cls_of[p]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PPT by transpositions.

namespace {

struct Site {
  int center;  // trans vertex (clique) or original vertex (junction)
  bool junction;
  std::vector<int> zone;  // sorted original vertices
};

std::vector<Site> all_sites(const BctTree& t) {
  std::vector<Site> out;
  for (int s = t.original_count; s < t.vertex_count(); ++s) out.push_back({s, false, t.star(s)});
  for (int j = 0; j < t.original_count; ++j) {
    if (k_degree(t, j) < 3) continue;
    std::vector<int> z = t.kadj[j];
    z.push_back(j);
    std::sort(z.begin(), z.end());
    out.push_back({j, true, z});
  }
  return out;
}

bool in_zone(const Site& s, int v) { return std::binary_search(s.zone.begin(), s.zone.end(), v); }

// Is the local swap of the pebbles at x and y possible right now?
bool ready(const Site& s, const TreeConfig& c, int x, int y) {
  if (!in_zone(s, x) || !in_zone(s, y)) return false;
  int free = 0;
  for (int z : s.zone)
    if (z != x && z != y && c.occ[z] == -1) ++free;
  if (!s.junction) return free >= 1;
  if (x == s.center || y == s.center) return free >= 2;
  return c.occ[s.center] == -1 && free >= 2;
}

// Exchanges the pebbles at x and y inside a ready site.
void local_swap(const Site& s, Mover& mv, int x, int y) {
  auto free_in_zone = [&](int skip) {
    for (int z : s.zone)
      if (z != x && z != y && z != skip && z != s.center && mv.c.occ[z] == -1) return z;
    for (int z : s.zone)
      if (z != x && z != y && z != skip && mv.c.occ[z] == -1) return z;
    return -1;
  };
  if (!s.junction) {
    int z = free_in_zone(-1);
    mv.move(x, z);
    mv.move(y, x);
    mv.move(z, y);
    return;
  }
  int j = s.center;
  if (x == j || y == j) {
    int other = x == j ? y : x;
    int n2 = free_in_zone(-1);
    int n3 = free_in_zone(n2);
    mv.move(j, n2);
    mv.move(other, j);
    mv.move(j, n3);
    mv.move(n2, j);
    mv.move(j, other);
    mv.move(n3, j);
    return;
  }
  int n3 = free_in_zone(j);
  mv.move(x, j);
  mv.move(j, n3);
  mv.move(y, j);
  mv.move(j, x);
  mv.move(n3, j);
  mv.move(j, y);
}

struct Swapper {
  const BctTree& t;
  std::vector<Site> sites;
  Rooted rooted;
  std::vector<std::vector<int>> zdist;  // per site, original-vertex steps to its zone

  explicit Swapper(const BctTree& tr) : t(tr), sites(all_sites(tr)), rooted(tr) {}

  int pos(const TreeConfig& c, int p) const {
    for (int v = 0; v < t.original_count; ++v)
      if (c.occ[v] == p) return v;
    return -1;
  }

  // Walks pebble p into `goal` (original vertices) clearing the way.
  bool bring(Mover& mv, int p, const std::vector<char>& goal, std::vector<char> prot) {
    int at = pos(mv.c, p);
    if (goal[at]) return true;
    auto path = tree_path(t, at, [&](int y) { return goal[y] != 0; }, prot);
    if (path.empty()) return false;
    for (size_t i = 1; i < path.size(); ++i) {
      int w = path[i];
      prot[path[i - 1]] = 1;
      bool ok = mv.clear(w, prot);
      prot[path[i - 1]] = 0;
      if (!ok) return false;
      mv.move(path[i - 1], w);
    }
    return true;
  }

  bool make_free(Mover& mv, const Site& s, int x, int y) {
    int n = t.original_count;
    std::vector<char> prot(n, 0);
    prot[x] = prot[y] = 1;
    for (int round = 0; round < 2 && !ready(s, mv.c, x, y); ++round) {
      int want = -1;
      if (s.junction && x != s.center && y != s.center && mv.c.occ[s.center] != -1) {
        want = s.center;
      } else {
        for (int z : s.zone)
          if (z != x && z != y && mv.c.occ[z] != -1 && !(s.junction && z == s.center)) {
            want = z;
            break;
          }
      }
      if (want < 0 || !mv.clear(want, prot)) return false;
      prot[want] = 1;
    }
    return ready(s, mv.c, x, y);
  }

  bool try_site(Mover& mv, const Site& s, int first, int second) {
    int n = t.original_count;
    std::vector<char> goal(n, 0), prot(n, 0);
    for (int z : s.zone) goal[z] = 1;
    if (!bring(mv, first, goal, prot)) return false;
    int a = pos(mv.c, first);
    goal[a] = 0;
    prot[a] = 1;
    if (!bring(mv, second, goal, prot)) return false;
    return make_free(mv, s, a, pos(mv.c, second));
  }

  // Breadth-first search for a ready site. Bystanders are interchangeable
  // here since the approach is undone afterwards.
  bool search(Mover& mv, int pa, int pb, long long cap = 400000) {
    int n = t.original_count;
    auto key = [&](const TreeConfig& c) {
      std::string k(n, '.');
      for (int v = 0; v < n; ++v)
        if (c.occ[v] == pa) k[v] = 'a';
        else if (c.occ[v] == pb) k[v] = 'b';
        else if (c.occ[v] != -1) k[v] = 'o';
      return k;
    };
    std::vector<TreeConfig> states{mv.c};
    std::vector<int> parent{-1};
    std::vector<std::pair<int, int>> via{{-1, -1}};
    std::unordered_map<std::string, int> seen{{key(mv.c), 0}};
    auto done = [&](const TreeConfig& c) {
      int x = pos(c, pa), y = pos(c, pb);
      for (const auto& s : sites)
        if (ready(s, c, x, y)) return true;
      return false;
    };
    int found = done(mv.c) ? 0 : -1;
    for (size_t head = 0; head < states.size() && found < 0; ++head) {
      for (int u = 0; u < n && found < 0; ++u) {
        if (states[head].occ[u] == -1) continue;
        for (int v : t.kadj[u]) {
          if (states[head].occ[v] != -1) continue;
          TreeConfig nc = states[head];
          std::swap(nc.occ[u], nc.occ[v]);
          auto k = key(nc);
          if (seen.count(k)) continue;
          if (static_cast<long long>(states.size()) >= cap) return false;
          seen.emplace(std::move(k), static_cast<int>(states.size()));
          states.push_back(nc);
          parent.push_back(static_cast<int>(head));
          via.push_back({u, v});
          if (done(nc)) {
            found = static_cast<int>(states.size()) - 1;
            break;
          }
        }
      }
    }
    if (found < 0) return false;
    std::vector<std::pair<int, int>> moves;
    for (int x = found; parent[x] >= 0; x = parent[x]) moves.push_back(via[x]);
    for (size_t i = moves.size(); i-- > 0;) mv.move(moves[i].first, moves[i].second);
    return true;
  }

  // Weighted best-first search toward a ready site, for trees too big for
  // plain breadth-first search. Not optimal, just finds something.
  bool guided(Mover& mv, int pa, int pb, long long cap = 1500000) {
    int n = t.original_count;
    if (zdist.empty()) {
      for (const auto& s : sites) {
        std::vector<int> d(t.vertex_count(), -1);
        std::deque<int> q;
        for (int z : s.zone) {
          d[z] = 0;
          q.push_back(z);
        }
        while (!q.empty()) {
          int x = q.front();
          q.pop_front();
          for (int y : t.adj[x])
            if (d[y] < 0) {
              d[y] = d[x] + (t.is_trans(y) ? 0 : 1);
              if (t.is_trans(y)) q.push_front(y);
              else q.push_back(y);
            }
        }
        d.resize(n);
        zdist.push_back(std::move(d));
      }
    }
    auto h = [&](const TreeConfig& c) {
      int x = pos(c, pa), y = pos(c, pb), best = 1 << 30;
      for (size_t i = 0; i < sites.size(); ++i) {
        const Site& s = sites[i];
        int free = 0;
        for (int z : s.zone)
          if (z != x && z != y && c.occ[z] == -1) ++free;
        int need = s.junction ? 2 : 1;
        int v = zdist[i][x] + zdist[i][y] + 2 * std::max(0, need - free);
        if (s.junction && x != s.center && y != s.center && c.occ[s.center] != -1) ++v;
        best = std::min(best, v);
      }
      return best;
    };
    auto key = [&](const TreeConfig& c) {
      std::string k(n, '.');
      for (int v = 0; v < n; ++v)
        if (c.occ[v] == pa) k[v] = 'a';
        else if (c.occ[v] == pb) k[v] = 'b';
        else if (c.occ[v] != -1) k[v] = 'o';
      return k;
    };
    std::vector<TreeConfig> states{mv.c};
    std::vector<int> parent{-1}, depth{0};
    std::vector<std::pair<int, int>> via{{-1, -1}};
    std::unordered_map<std::string, int> seen{{key(mv.c), 0}};
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> open;
    open.push({0, 0});
    int found = -1;
    while (!open.empty() && found < 0) {
      int head = open.top().second;
      open.pop();
      if (ready_site(states[head], pos(states[head], pa), pos(states[head], pb))) {
        found = head;
        break;
      }
      for (int u = 0; u < n; ++u) {
        if (states[head].occ[u] == -1) continue;
        for (int v : t.kadj[u]) {
          if (states[head].occ[v] != -1) continue;
          TreeConfig nc = states[head];
          std::swap(nc.occ[u], nc.occ[v]);
          auto k = key(nc);
          if (seen.count(k)) continue;
          if (static_cast<long long>(states.size()) >= cap) return false;
          int id = static_cast<int>(states.size());
          seen.emplace(std::move(k), id);
          parent.push_back(head);
          depth.push_back(depth[head] + 1);
          via.push_back({u, v});
          open.push({4LL * h(nc) + depth[id], id});
          states.push_back(std::move(nc));
        }
      }
    }
    if (found < 0) return false;
    std::vector<std::pair<int, int>> moves;
    for (int x = found; parent[x] >= 0; x = parent[x]) moves.push_back(via[x]);
    for (size_t i = moves.size(); i-- > 0;) mv.move(moves[i].first, moves[i].second);
    return true;
  }

  const Site* ready_site(const TreeConfig& c, int x, int y) const {
    for (const auto& s : sites)
      if (ready(s, c, x, y)) return &s;
    return nullptr;
  }

  // Swaps pebbles pa and pb; everything else ends where it started.
  bool transpose(Mover& mv, int pa, int pb) {
    size_t mark = mv.plan.size();
    TreeConfig snap = mv.c;
    auto finish = [&]() {
      int x = pos(mv.c, pa), y = pos(mv.c, pb);
      const Site* s = ready_site(mv.c, x, y);
      TreePlan g(mv.plan.begin() + mark, mv.plan.end());
      local_swap(*s, mv, x, y);
      for (size_t i = g.size(); i-- > 0;) mv.move(g[i].to, g[i].from);
    };
    auto rollback = [&]() {
      mv.plan.resize(mark);
      mv.c = snap;
    };
    int a0 = pos(mv.c, pa), b0 = pos(mv.c, pb);
    std::vector<const Site*> order;
    for (const auto& s : sites) order.push_back(&s);
    auto cost = [&](const Site* s) { return rooted.dist(a0, s->center) + rooted.dist(b0, s->center); };
    std::stable_sort(order.begin(), order.end(),
                     [&](const Site* x, const Site* y) { return cost(x) < cost(y); });
    for (const Site* s : order) {
      for (int flip = 0; flip < 2; ++flip) {
        bool ok = flip ? try_site(mv, *s, pb, pa) : try_site(mv, *s, pa, pb);
        if (ok) {
          finish();
          return true;
        }
        rollback();
      }
    }
    if (search(mv, pa, pb, 50000) || guided(mv, pa, pb)) {
      finish();
      return true;
    }
    rollback();
    return false;
  }
};

}  // namespace

TreePlan ppt_solve(const BctTree& t, const TreeConfig& start, const std::map<int, int>& targets) {
  check_targets(t, start, targets);
  for (auto& [p, v] : targets)
    if (start.occ[v] == -1) throw Error(Errc::BadInput, "not a permutation instance");
  Swapper sw(t);
  Mover mv{t, start, {}};
  std::unordered_map<int, int> target_owner;
  for (auto& [p, v] : targets) target_owner[v] = p;
  for (int tv : targets_by_depth(t, targets)) {
    int p = target_owner[tv];
    int q = mv.c.occ[tv];
    if (q == p) continue;
    if (sw.transpose(mv, p, q)) continue;
    // go through a third pebble: (p c)(q c)(p c) = (p q)
    bool done = false;
    for (int v = 0; v < t.original_count && !done; ++v) {
      int c = mv.c.occ[v];
      if (c == -1 || c == p || c == q) continue;
      size_t mark = mv.plan.size();
      TreeConfig snap = mv.c;
      if (sw.transpose(mv, p, c) && sw.transpose(mv, q, c) && sw.transpose(mv, p, c)) {
        done = true;
      } else {
        mv.plan.resize(mark);
        mv.c = snap;
      }
    }
    if (!done) throw Error(Errc::InfeasibleSwap, "pebbles " + std::to_string(p) + " and " +
                                                     std::to_string(q) + " cannot be exchanged");
  }
  return mv.plan;
}

namespace {

// Pebble-only exchange over growing neighbourhoods of the two blocks.
std::optional<Plan> loose_exchange(const Digraph& d, const Decomposition& dec,
                                   const Configuration& a, int u, int v) {
  int n = d.vertex_count();
  std::vector<char> in(n, 0);
  auto add_blocks = [&](int x) {
    in[x] = 1;
    for (int b : dec.blocks_of[x])
      for (int y : dec.components[b].vertices) in[y] = 1;
  };
  add_blocks(u);
  add_blocks(v);
  while (true) {
    std::vector<char> grow = in;
    for (int x = 0; x < n; ++x)
      if (in[x]) {
        for (int y : d.out(x)) grow[y] = 1;
        for (int y : d.in(x)) grow[y] = 1;
      }
    in = grow;
    std::vector<int> region;
    for (int x = 0; x < n; ++x)
      if (in[x]) region.push_back(x);
    if (auto p = pebble_exchange(d, a, u, v, region)) return p;
    if (static_cast<int>(region.size()) == n) return std::nullopt;
  }
}

}  // namespace

Plan convert_path(const TreePlan& tp, const Digraph& d, const Decomposition& dec, const BctTree& t,
                  const Configuration& a) {
  if (a.hole_count() < 2) throw Error(Errc::TooFewHoles, "tree moves need two holes");
  CycleBank bank(d);
  Configuration cur = a;
  Plan out;
  for (size_t i = 0; i < tp.size(); ++i) {
    const TreeMove& m = tp[i];
    TreeConfig probe = lift_config(cur);
    apply_tree_move(t, probe, m, static_cast<int>(i));
    auto piece = exchange(d, dec, bank, cur, m.from, m.to);
    if (!piece) piece = loose_exchange(d, dec, cur, m.from, m.to);
    if (!piece)
      throw Error(Errc::InvalidIntermediate,
                  "no exchange for tree move " + std::to_string(i), static_cast<int>(i));
    run_inplace(cur, *piece, d);
    append(out, *piece);
  }
  return out;
}

}  // namespace disc
