#include "disc/exchange.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

namespace disc {

CycleBank::CycleBank(const Digraph& d) : through_(d.vertex_count()) {
  std::set<std::vector<int>> seen;
  for (auto [a, b] : d.edges()) {
    auto back = shortest_path(d, b, a);
    if (back.empty()) continue;
    std::vector<int> ring{a};
    for (size_t i = 0; i + 1 < back.size(); ++i) ring.push_back(back[i]);
    auto mn = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), mn, ring.end());
    if (!seen.insert(ring).second) continue;
    int id = static_cast<int>(cycles_.size());
    for (int v : ring) through_[v].push_back(id);
    cycles_.push_back(Cycle{ring});
  }
}

namespace {

// cycle >= 0: k forward rotations of that cycle; cycle < 0: the single move mv
struct Step {
  int cycle;
  int k;
  Move mv;
};

Plan build_plan(const Digraph& d, const Configuration& a, const std::vector<Step>& steps,
                const std::vector<Cycle>& cyc, Move core, int u, int v) {
  Configuration w = a;
  Plan out;
  for (auto s : steps) {
    if (s.cycle >= 0) {
      rotate_inplace(w, cyc[s.cycle], s.k, out);
    } else {
      apply_move_inplace(w, s.mv, d);
      out.push_back(s.mv);
    }
  }
  apply_move_inplace(w, core, d);
  out.push_back(core);
  for (size_t i = steps.size(); i-- > 0;) {
    if (steps[i].cycle < 0) {
      Move back{steps[i].mv.to, steps[i].mv.from};
      Plan undo = d.has_edge(back.from, back.to) ? Plan{back} : reverse_move(d, steps[i].mv);
      for (auto m : undo) apply_move_inplace(w, m, d);
      append(out, undo);
      continue;
    }
    const Cycle& c = cyc[steps[i].cycle];
    rotate_inplace(w, c, c.length() - steps[i].k, out);
  }
  if (w != swap_config(a, u, v))
    throw Error(Errc::InvalidIntermediate, "exchange did not restore the other agents");
  return out;
}

}  // namespace

std::optional<Plan> exchange_in_region(const Digraph& d, const CycleBank& bank,
                                       const Configuration& a, int u, int v,
                                       const std::vector<int>& region, long long state_cap) {
  if (!a.is_hole(v)) throw Error(Errc::VertexNotHole, "exchange target must hold a hole");
  if (u == v) return Plan{};
  if (d.has_edge(u, v)) return Plan{{u, v}};
  int n = d.vertex_count();
  std::vector<int> loc(n, -1), glob;
  if (region.empty()) {
    for (int x = 0; x < n; ++x) {
      loc[x] = x;
      glob.push_back(x);
    }
  } else {
    for (int x : region)
      if (loc[x] < 0) {
        loc[x] = static_cast<int>(glob.size());
        glob.push_back(x);
      }
  }
  if (loc[u] < 0 || loc[v] < 0) return std::nullopt;
  long long m = static_cast<long long>(glob.size());
  if (m * m * (m + 1) > state_cap) return std::nullopt;

  // cycles fully inside the region, with local successor tables
  std::vector<int> cyc_ids;
  std::vector<std::vector<int>> through(m);
  std::vector<std::vector<int>> succ;  // per kept cycle: local vertex -> local succ or -1
  for (int cid = 0; cid < static_cast<int>(bank.cycles().size()); ++cid) {
    const Cycle& c = bank.cycles()[cid];
    bool inside = std::all_of(c.ring.begin(), c.ring.end(), [&](int x) { return loc[x] >= 0; });
    if (!inside) continue;
    int k = static_cast<int>(cyc_ids.size());
    cyc_ids.push_back(cid);
    succ.emplace_back();
    for (int i = 0; i < c.length(); ++i) through[loc[c.ring[i]]].push_back(k);
  }
  auto succ_of = [&](int k, int lx) {
    const Cycle& c = bank.cycles()[cyc_ids[k]];
    int l = c.length();
    for (int i = 0; i < l; ++i)
      if (loc[c.ring[i]] == lx) return loc[c.ring[(i + 1) % l]];
    return -1;
  };

  std::vector<std::vector<int>> in_local(m);
  for (int lx = 0; lx < m; ++lx)
    for (int y : d.in(glob[lx]))
      if (loc[y] >= 0) in_local[lx].push_back(loc[y]);

  std::vector<int> helpers;
  for (int x : glob)
    if (x != v && a.is_hole(x)) helpers.push_back(loc[x]);
  const int none = static_cast<int>(m);
  auto enc = [&](int p, int h, int g) { return (static_cast<long long>(p) * m + h) * (m + 1) + g; };
  long long total = m * m * (m + 1);
  std::vector<int> par_cycle(total, -2);
  std::vector<long long> par_state(total, -1);
  std::deque<long long> q;
  int lu = loc[u], lv = loc[v];
  if (helpers.empty()) {
    long long s = enc(lu, lv, none);
    par_cycle[s] = -1;
    q.push_back(s);
  } else {
    for (int g : helpers) {
      long long s = enc(lu, lv, g);
      par_cycle[s] = -1;
      q.push_back(s);
    }
  }
  long long goal = -1;
  while (!q.empty() && goal < 0) {
    long long s = q.front();
    q.pop_front();
    int g = static_cast<int>(s % (m + 1));
    int h = static_cast<int>((s / (m + 1)) % m);
    int p = static_cast<int>(s / (m + 1) / m);
    // candidate cycles touch p, h or g
    std::vector<int> cand;
    for (int x : {p, h, g}) {
      if (x == none) continue;
      cand.insert(cand.end(), through[x].begin(), through[x].end());
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int k : cand) {
      int sp = succ_of(k, p), sh = succ_of(k, h), sg = g == none ? -1 : succ_of(k, g);
      bool valid = sg >= 0 || (sp >= 0 && sh >= 0);
      if (!valid) continue;
      int np = sp >= 0 ? sp : p, nh = sh >= 0 ? sh : h, ng = sg >= 0 ? sg : g;
      long long t = enc(np, nh, ng);
      if (par_cycle[t] != -2) continue;
      par_cycle[t] = k;
      par_state[t] = s;
      if (d.has_edge(glob[np], glob[nh])) {
        goal = t;
        break;
      }
      q.push_back(t);
    }
    // single moves into the helper hole are valid in both runs
    if (goal >= 0 || g == none) continue;
    for (int x : in_local[g]) {
      int np = p, nh = h;
      if (x == p) np = g;
      else if (x == h) nh = g;
      long long t = enc(np, nh, x);
      if (par_cycle[t] != -2) continue;
      par_cycle[t] = -3 - x;
      par_state[t] = s;
      if (d.has_edge(glob[np], glob[nh])) {
        goal = t;
        break;
      }
      q.push_back(t);
    }
  }
  if (goal < 0) return std::nullopt;

  std::vector<Step> seq;
  for (long long s = goal; par_cycle[s] != -1; s = par_state[s]) {
    int op = par_cycle[s];
    if (op >= 0) {
      seq.push_back({cyc_ids[op], 1, {}});
    } else {
      int from = -3 - op;
      int g_before = static_cast<int>(par_state[s] % (m + 1));
      seq.push_back({-1, 0, {glob[from], glob[g_before]}});
    }
  }
  std::reverse(seq.begin(), seq.end());
  std::vector<Step> steps;
  for (const Step& st : seq) {
    if (st.cycle >= 0 && !steps.empty() && steps.back().cycle == st.cycle) ++steps.back().k;
    else steps.push_back(st);
  }
  int gp = static_cast<int>(goal / (m + 1) / m), gh = static_cast<int>((goal / (m + 1)) % m);
  return build_plan(d, a, steps, bank.cycles(), Move{glob[gp], glob[gh]}, u, v);
}

std::optional<Plan> exchange(const Digraph& d, const Decomposition& dec, const CycleBank& bank,
                             const Configuration& a, int u, int v) {
  if (d.has_edge(u, v)) {
    if (!a.is_hole(v)) throw Error(Errc::VertexNotHole, "exchange target must hold a hole");
    return Plan{{u, v}};
  }
  int n = d.vertex_count();
  std::vector<char> in(n, 0);
  auto add_blocks = [&](int x) {
    in[x] = 1;
    for (int b : dec.blocks_of[x])
      for (int y : dec.components[b].vertices) in[y] = 1;
  };
  add_blocks(u);
  add_blocks(v);
  for (int round = 0; round < 3; ++round) {
    std::vector<int> region;
    for (int x = 0; x < n; ++x)
      if (in[x]) region.push_back(x);
    if (auto p = exchange_in_region(d, bank, a, u, v, region)) return p;
    if (static_cast<int>(region.size()) == n) return std::nullopt;
    std::vector<char> grow = in;
    for (int x = 0; x < n; ++x) {
      if (!in[x]) continue;
      for (int y : d.out(x)) grow[y] = 1;
      for (int y : d.in(x)) grow[y] = 1;
    }
    for (int x = 0; x < n; ++x)
      if (grow[x] && !in[x]) {
        for (int b : dec.blocks_of[x])
          for (int y : dec.components[b].vertices) grow[y] = 1;
      }
    in = grow;
  }
  return exchange_in_region(d, bank, a, u, v, {});
}

namespace {

// BFS over placements inside the region. With `labelled` the holes keep their
// identities too (codes >= 100), otherwise every hole is 0.
std::optional<Plan> region_bfs(const Digraph& d, const Configuration& a, int u, int v,
                               const std::vector<int>& region, long long state_cap,
                               bool labelled) {
  if (!a.is_hole(v)) throw Error(Errc::VertexNotHole, "exchange target must hold a hole");
  int n = d.vertex_count();
  std::vector<int> loc(n, -1), glob;
  for (int x : region)
    if (loc[x] < 0) {
      loc[x] = static_cast<int>(glob.size());
      glob.push_back(x);
    }
  if (loc[u] < 0 || loc[v] < 0) return std::nullopt;
  int m = static_cast<int>(glob.size());
  std::vector<std::vector<int>> out_local(m);
  for (int lx = 0; lx < m; ++lx)
    for (int y : d.out(glob[lx]))
      if (loc[y] >= 0) out_local[lx].push_back(loc[y]);
  // pebble labels inside the region, 0 = hole
  std::string start(m, '\0');
  int next = 1, next_hole = 100;
  for (int lx = 0; lx < m; ++lx) {
    if (!a.is_hole(glob[lx]))
      start[lx] = static_cast<char>(next++);
    else if (labelled)
      start[lx] = static_cast<char>(next_hole++);
  }
  if (next >= 100 || next_hole > 127) return std::nullopt;
  auto hole = [](char c) { return c == 0 || c >= 100; };
  std::string goal = start;
  std::swap(goal[loc[u]], goal[loc[v]]);
  std::vector<std::string> states{start};
  std::vector<int> parent{-1};
  std::vector<Move> via{{-1, -1}};
  std::unordered_map<std::string, int> seen{{start, 0}};
  int found = start == goal ? 0 : -1;
  for (size_t head = 0; head < states.size() && found < 0; ++head) {
    const std::string s = states[head];
    for (int x = 0; x < m && found < 0; ++x) {
      if (!labelled && !s[x]) continue;
      for (int y : out_local[x]) {
        if (!hole(s[y])) continue;
        std::string t = s;
        std::swap(t[x], t[y]);
        if (seen.count(t)) continue;
        if (static_cast<long long>(states.size()) >= state_cap) return std::nullopt;
        seen.emplace(t, static_cast<int>(states.size()));
        states.push_back(std::move(t));
        parent.push_back(static_cast<int>(head));
        via.push_back({glob[x], glob[y]});
        if (states.back() == goal) {
          found = static_cast<int>(states.size()) - 1;
          break;
        }
      }
    }
  }
  if (found < 0) return std::nullopt;
  Plan out;
  for (int x = found; parent[x] >= 0; x = parent[x]) out.push_back(via[x]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Plan> pebble_exchange(const Digraph& d, const Configuration& a, int u, int v,
                                    const std::vector<int>& region, long long state_cap) {
  return region_bfs(d, a, u, v, region, state_cap, false);
}

std::optional<Plan> labelled_exchange(const Digraph& d, const Configuration& a, int u, int v,
                                      const std::vector<int>& region, long long state_cap) {
  return region_bfs(d, a, u, v, region, state_cap, true);
}

}  // namespace disc
