#include "disc/sbd.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace disc {

Digraph AttachedComponent::digraph() const {
  int n = std::max(component.sub.vertex_count(), external + 1);
  Digraph d(n);
  for (auto [u, v] : component.edges) d.add_edge(u, v);
  d.add_edge(external, attach);
  if (mode == Mode::AttachedEdge) d.add_edge(attach, external);
  return d;
}

std::optional<SwapGadget> find_gadget(const Component& c) {
  if (classify_component(c) == ComponentKind::PartiallyBidirectionalCycle) return std::nullopt;
  auto ed = open_ear_decomposition(c);
  if (!ed.is_regular) return std::nullopt;
  Cycle base{ed.ears[0].path};
  for (size_t i = 1; i < ed.ears.size(); ++i) {
    const Ear& e = ed.ears[i];
    if (!e.trivial() && base.contains(e.start()) && base.contains(e.end()))
      return SwapGadget{base, e};
  }
  return std::nullopt;
}

bool cyclic_order_matches(const std::vector<int>& ring, const Configuration& a,
                          const std::map<int, int>& targets) {
  std::map<int, int> owner;
  for (auto& [p, v] : targets) owner[v] = p;
  std::vector<int> now, want;
  for (int v : ring) {
    if (!a.is_hole(v)) now.push_back(a.at(v).id);
    auto it = owner.find(v);
    if (it != owner.end()) want.push_back(it->second);
  }
  if (now.size() != want.size()) return false;
  if (now.empty()) return true;
  for (size_t s = 0; s < want.size(); ++s) {
    bool ok = true;
    for (size_t i = 0; i < now.size() && ok; ++i) ok = now[i] == want[(i + s) % want.size()];
    if (ok) return true;
  }
  return false;
}

namespace {

int holes_in(const Configuration& a, const std::vector<int>& verts) {
  int h = 0;
  for (int v : verts)
    if (a.is_hole(v)) ++h;
  return h;
}

std::vector<int> base_ring(const Component& c) { return open_ear_decomposition(c).ears[0].path; }

}  // namespace

std::optional<Plan> solve_pb_cycle(const Component& c, const Configuration& a,
                                   const std::map<int, int>& targets) {
  auto ring = base_ring(c);
  int l = static_cast<int>(ring.size());
  if (holes_in(a, ring) == 0) throw Error(Errc::NoHoles, "cycle without holes");
  if (!cyclic_order_matches(ring, a, targets)) return std::nullopt;
  std::vector<int> idx(c.sub.vertex_count(), -1);
  for (int i = 0; i < l; ++i) idx[ring[i]] = i;

  // pebbles in ring order with unwrapped goal coordinates
  struct Peb {
    int pos, goal;  // unwrapped
  };
  std::vector<Peb> ps;
  for (int i = 0; i < l; ++i)
    if (!a.is_hole(ring[i])) ps.push_back({i, idx[targets.at(a.at(ring[i]).id)]});
  int k = static_cast<int>(ps.size());
  if (k == 0) return Plan{};
  // Pick an anchor pebble and let the others follow in ring order, each
  // taking the first admissible goal ahead of its predecessor. The cheapest
  // assignment whose spread stays under one lap wins.
  std::vector<Peb> best;
  long long best_cost = -1;
  for (int anchor = 0; anchor < k; ++anchor)
    for (int extra = 0; extra < 2; ++extra) {
      std::vector<Peb> q;
      for (int i = 0; i < k; ++i) {
        int j = (anchor + i) % k;
        q.push_back({ps[j].pos + (j < anchor ? l : 0), ps[j].goal});
      }
      q[0].goal = q[0].pos + ((q[0].goal - q[0].pos) % l + l) % l + extra * l;
      for (int i = 1; i < k; ++i) {
        int lo = std::max(q[i].pos, q[i - 1].goal + 1);
        q[i].goal = lo + ((q[i].goal - lo) % l + l) % l;
      }
      if (q[k - 1].goal >= q[0].goal + l) continue;
      long long cost = 0;
      for (auto& x : q) cost += x.goal - x.pos;
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        best = q;
      }
    }
  if (best_cost < 0) return std::nullopt;
  ps = best;

  Plan out;
  std::vector<char> occ(l, 0);
  for (auto& p : ps) occ[p.pos % l] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& p : ps) {
      while (p.pos < p.goal && !occ[(p.pos + 1) % l]) {
        int from = p.pos % l, to = (p.pos + 1) % l;
        out.push_back({ring[from], ring[to]});
        occ[from] = 0;
        occ[to] = 1;
        ++p.pos;
        progress = true;
      }
    }
  }
  for (auto& p : ps)
    if (p.pos != p.goal) throw Error(Errc::InvalidIntermediate, "cycle schedule stalled");
  return out;
}

namespace {

// Complete search over (pebble p position, hole set) inside the component.
Plan mpp_search(const Component& c, const Configuration& a, int p, int v,
                long long cap = 2'000'000) {
  const Digraph& d = c.sub;
  int n = d.vertex_count();
  auto key = [&](const Configuration& x) {
    std::string k;
    for (int z : c.vertices) k.push_back(x.is_hole(z) ? '.' : x.at(z) == AgentLabel::pebble(p) ? 'p' : 'o');
    return k;
  };
  std::vector<char> inside(n, 0);
  for (int x : c.vertices) inside[x] = 1;
  std::vector<Configuration> states{a};
  std::vector<int> parent{-1};
  std::vector<Move> via{{}};
  std::unordered_map<std::string, int> seen{{key(a), 0}};
  for (size_t head = 0; head < states.size(); ++head) {
    if (states[head].pebble_position(p) == v) {
      Plan f;
      for (int x = static_cast<int>(head); parent[x] >= 0; x = parent[x]) f.push_back(via[x]);
      std::reverse(f.begin(), f.end());
      return f;
    }
    for (int h : states[head].hole_vertices()) {
      if (!inside[h]) continue;
      for (int u : d.in(h)) {
        if (!inside[u] || states[head].is_hole(u)) continue;
        Configuration nx = states[head];
        nx.swap_vertices(u, h);
        auto k = key(nx);
        if (seen.count(k)) continue;
        if (static_cast<long long>(states.size()) >= cap)
          throw Error(Errc::StateSpaceTooLarge, "motion planning search");
        seen.emplace(std::move(k), static_cast<int>(states.size()));
        states.push_back(std::move(nx));
        parent.push_back(static_cast<int>(head));
        via.push_back({u, h});
      }
    }
  }
  throw Error(Errc::Unreachable, "pebble cannot reach the target vertex");
}

Plan mpp_greedy(const Component& c, const Configuration& a, int p, int v);

}  // namespace

Plan mpp_solve(const Component& c, const Configuration& a, int p, int v) {
  if (!c.contains(v)) throw Error(Errc::VertexNotInComponent, "target outside component");
  if (holes_in(a, c.vertices) == 0) throw Error(Errc::NoHoles, "component without holes");
  int at = a.pebble_position(p);
  if (at < 0 || !c.contains(at)) throw Error(Errc::VertexNotInComponent, "pebble outside component");
  try {
    return mpp_greedy(c, a, p, v);
  } catch (const Error& e) {
    if (e.code() != Errc::Unreachable) throw;
  }
  return mpp_search(c, a, p, v);
}

namespace {

// Walks p along a shortest path, turning one short cycle per edge.
Plan mpp_greedy(const Component& c, const Configuration& a, int p, int v) {
  if (!c.contains(v)) throw Error(Errc::VertexNotInComponent, "target outside component");
  if (holes_in(a, c.vertices) == 0) throw Error(Errc::NoHoles, "component without holes");
  const Digraph& d = c.sub;
  int n = d.vertex_count();
  std::vector<char> inside(n, 0);
  for (int x : c.vertices) inside[x] = 1;
  Configuration cur = a;
  Plan out;
  int at = cur.pebble_position(p);
  if (at < 0 || !inside[at]) throw Error(Errc::VertexNotInComponent, "pebble outside component");
  auto path = shortest_path(d, at, v, inside);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    int x = path[i], y = path[i + 1];
    auto back = shortest_path(d, y, x, inside);
    Cycle cyc{{x}};
    for (size_t j = 0; j + 1 < back.size(); ++j) cyc.ring.push_back(back[j]);
    if (holes_in(cur, cyc.ring) == 0) {
      // nearest hole whose path reaches the cycle away from x
      std::vector<int> par(n, -2);
      std::deque<int> q;
      for (int z : cyc.ring)
        if (z != x) {
          par[z] = -1;
          q.push_back(z);
        }
      int hole = -1;
      while (!q.empty() && hole < 0) {
        int z = q.front();
        q.pop_front();
        for (int u : d.out(z)) {
          if (!inside[u] || par[u] != -2 || u == x) continue;
          par[u] = z;
          if (cur.is_hole(u)) {
            hole = u;
            break;
          }
          q.push_back(u);
        }
      }
      if (hole < 0) throw Error(Errc::Unreachable, "no hole can reach the cycle");
      std::vector<int> walk{hole};
      while (par[walk.back()] >= 0) walk.push_back(par[walk.back()]);
      // walk goes hole -> ... -> cycle vertex; pebbles step backwards into it
      for (size_t j = 1; j < walk.size(); ++j) {
        Move m{walk[j], walk[j - 1]};
        apply_move_inplace(cur, m, d);
        out.push_back(m);
      }
    }
    rotate_inplace(cur, cyc, 1, out);
  }
  return out;
}

}  // namespace

namespace {

Plan exchange_or_throw(const Digraph& d, const Configuration& a, int u, int w,
                       const std::vector<int>& region) {
  CycleBank bank(d);
  // rotation search first; helpers may throw on one-way edges, so a failure
  // there just means trying the next strategy
  std::optional<Plan> p;
  for (const auto& reg : {region, std::vector<int>{}}) {
    try {
      p = exchange_in_region(d, bank, a, u, w, reg);
    } catch (const Error&) {
    }
    if (p) break;
  }
  if (!p) p = labelled_exchange(d, a, u, w, region);
  if (!p) throw Error(Errc::InvalidIntermediate, "no exchange plan found");
  return *p;
}

void check_attached(const AttachedComponent& ac) {
  const auto& c = ac.component;
  if (ac.external < 0 || c.contains(ac.external) || !c.contains(ac.attach))
    throw Error(Errc::NotAttached, "external vertex must hook onto the component");
}

// Runs rotations over a chain; false when some cycle has no hole.
bool run_rotations(Configuration& w, const std::vector<Cycle>& cs, const std::vector<int>& ks,
                   Plan& out) {
  try {
    for (size_t i = 0; i < cs.size(); ++i) rotate_inplace(w, cs[i], ks[i], out);
  } catch (const Error&) {
    return false;
  }
  return true;
}

int forward_dist(const Cycle& c, int from, int to) {
  int l = c.length();
  return ((c.index_of(to) - c.index_of(from)) % l + l) % l;
}

// Direct construction: hole travels from w to y along the cycle chain, the
// pebble steps in, everything is rotated back.
std::optional<Plan> entry_by_rotations(const AttachedComponent& ac, const Digraph& d,
                                       const Configuration& a, int w) {
  const Component& c = ac.component;
  int v = ac.external, y = ac.attach;
  std::vector<Cycle> cs;
  std::vector<int> ks;
  Plan pre;
  Configuration cur = a;
  if (c.kind == ComponentKind::PartiallyBidirectionalCycle) {
    Cycle ring{base_ring(c)};
    cs.push_back(ring);
    ks.push_back(forward_dist(ring, w, y));
  } else {
    auto ed = open_ear_decomposition(c);
    CycleSequence seq = cycle_sequence(c, ed, w, y);
    int hole = w;
    for (size_t j = 0; j < seq.cycles.size(); ++j) {
      const Cycle& cj = seq.cycles[j];
      int to = y;
      if (j + 1 < seq.cycles.size()) {
        auto [p, q] = seq.links[j];
        to = forward_dist(cj, hole, p) <= forward_dist(cj, hole, q) ? p : q;
      }
      cs.push_back(cj);
      ks.push_back(forward_dist(cj, hole, to));
      hole = to;
    }
    // second hole parked on the successor of w
    int sw = seq.cycles.front().succ(w);
    if (!cur.is_hole(sw)) {
      int h2 = -1;
      for (const auto& lab : cur.labels()) {
        if (!lab.is_hole()) continue;
        int at = cur.position(lab);
        if (at != w && c.contains(at)) {
          h2 = at;
          break;
        }
      }
      if (h2 < 0) return std::nullopt;
      std::vector<char> allowed(d.vertex_count(), 0);
      for (int x : c.vertices) allowed[x] = x != w;
      auto path = shortest_path(c.sub, sw, h2, allowed);
      if (path.empty()) return std::nullopt;
      for (size_t i = path.size() - 1; i-- > 0;) pre.push_back({path[i], path[i + 1]});
      run_inplace(cur, pre, d);
    }
  }
  Plan out = pre;
  if (!run_rotations(cur, cs, ks, out)) return std::nullopt;
  if (!cur.is_hole(y)) return std::nullopt;
  apply_move_inplace(cur, {v, y}, d);
  out.push_back({v, y});
  std::vector<Cycle> rcs(cs.rbegin(), cs.rend());
  std::vector<int> rks;
  for (size_t i = cs.size(); i-- > 0;) rks.push_back(cs[i].length() - ks[i]);
  if (!run_rotations(cur, rcs, rks, out)) return std::nullopt;
  if (!pre.empty()) {
    Plan back;
    for (size_t i = pre.size(); i-- > 0;) back.push_back({pre[i].to, pre[i].from});
    try {
      run_inplace(cur, back, d);
    } catch (const Error&) {
      return std::nullopt;
    }
    append(out, back);
  }
  if (cur != swap_config(a, v, w)) return std::nullopt;
  return out;
}

}  // namespace

Plan entry_swap(const AttachedComponent& ac, const Configuration& a, int w) {
  check_attached(ac);
  const Component& c = ac.component;
  int v = ac.external;
  if (!c.contains(w) || !a.is_hole(w)) throw Error(Errc::VertexNotHole, "w must be a hole in B");
  if (a.is_hole(v)) throw Error(Errc::BadInput, "no pebble on the external vertex");
  if (holes_in(a, c.vertices) < 2) throw Error(Errc::TooFewHoles, "entry needs two holes");
  Digraph d = ac.digraph();
  try {
    if (auto p = entry_by_rotations(ac, d, a, w)) return *p;
  } catch (const Error&) {
  }
  std::vector<int> region = c.vertices;
  region.push_back(v);
  return exchange_or_throw(d, a, v, w, region);
}

Plan stay_in_swap(const Component& c, const Configuration& a, int v, int w) {
  if (c.kind == ComponentKind::PartiallyBidirectionalCycle)
    throw Error(Errc::WrongKind, "stay-in exchange needs a regular ear decomposition");
  if (!c.contains(v) || !c.contains(w))
    throw Error(Errc::VertexNotInComponent, "both vertices must be in the component");
  if (!a.is_hole(w)) throw Error(Errc::VertexNotHole, "w must be a hole");
  if (holes_in(a, c.vertices) < 2) throw Error(Errc::TooFewHoles, "stay-in needs two holes");
  return exchange_or_throw(c.sub, a, v, w, c.vertices);
}

Plan attached_edge_swap(const AttachedComponent& ac, const Configuration& a, int u, int w) {
  check_attached(ac);
  const Component& c = ac.component;
  std::vector<int> region = c.vertices;
  region.push_back(ac.external);
  if (!a.is_hole(w)) throw Error(Errc::VertexNotHole, "w must be a hole");
  if (holes_in(a, region) < 2) throw Error(Errc::TooFewHoles, "attached edge needs two holes");
  if (c.kind == ComponentKind::RegularOed && c.contains(u) && c.contains(w) &&
      holes_in(a, c.vertices) >= 2)
    return stay_in_swap(c, a, u, w);
  Digraph d = ac.digraph();
  if (c.kind == ComponentKind::PartiallyBidirectionalCycle && c.contains(u) && c.contains(w) &&
      ac.mode == AttachedComponent::Mode::AttachedEdge) {
    // r_{d(u,y)} (y->v) r_k (v->y) r_{d(y,w)}, second hole parked on v
    int v = ac.external, y = ac.attach;
    Cycle ring{base_ring(c)};
    int l = ring.length();
    Configuration cur = a;
    Plan out, park;
    bool ok = true;
    if (!cur.is_hole(v)) {
      std::vector<char> allowed(d.vertex_count(), 0);
      for (int x : region) allowed[x] = x != u && x != w;
      int h2 = -1;
      for (const auto& lab : cur.labels()) {
        int at = cur.position(lab);
        if (lab.is_hole() && at != w && allowed[at]) {
          h2 = at;
          break;
        }
      }
      auto path = h2 < 0 ? std::vector<int>{} : shortest_path(d, v, h2, allowed);
      if (path.empty()) ok = false;
      for (size_t i = path.size(); ok && i-- > 1;) park.push_back({path[i - 1], path[i]});
      if (ok) run_inplace(cur, park, d);
    }
    if (ok) {
      out = park;
      int d1 = forward_dist(ring, u, y), d2 = forward_dist(ring, w, y);
      int k = d2 >= d1 ? d2 - d1 : l + d2 - d1;
      try {
        rotate_inplace(cur, ring, d1, out);
        apply_move_inplace(cur, {y, v}, d);
        out.push_back({y, v});
        rotate_inplace(cur, ring, k, out);
        apply_move_inplace(cur, {v, y}, d);
        out.push_back({v, y});
        rotate_inplace(cur, ring, forward_dist(ring, y, w), out);
        for (size_t i = park.size(); i-- > 0;) {
          Move m{park[i].to, park[i].from};
          apply_move_inplace(cur, m, d);
          out.push_back(m);
        }
        if (cur == swap_config(a, u, w)) return out;
      } catch (const Error&) {
      }
    }
  }
  return exchange_or_throw(d, a, u, w, region);
}

Plan two_bcc_swap(const Digraph& d, const Decomposition& dec, const Configuration& a, int av,
                  int bv) {
  if (a.hole_count() < 2) throw Error(Errc::TooFewHoles, "two components need two holes");
  if (!a.is_hole(bv)) throw Error(Errc::VertexNotHole, "b must be a hole");
  // find B1 holding av and B2 holding bv that share an articulation point
  int b1 = -1, b2 = -1;
  for (int x : dec.blocks_of[av])
    for (int y : dec.blocks_of[bv]) {
      if (b1 >= 0) break;
      if (x == y) continue;
      const auto& cx = dec.components[x];
      for (int art : dec.articulation_points)
        if (cx.contains(art) && dec.components[y].contains(art)) {
          b1 = x;
          b2 = y;
          break;
        }
    }
  if (b1 < 0)
    throw Error(Errc::NotJoinedByArticulationPoint, "vertices are not in adjacent components");
  std::vector<int> region = dec.components[b1].vertices;
  for (int x : dec.components[b2].vertices) region.push_back(x);
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());
  return exchange_or_throw(d, a, av, bv, region);
}

}  // namespace disc
