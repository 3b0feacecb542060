#include "disc/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "disc/solver.hpp"

namespace disc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(rng, 0, static_cast<int>(i) - 1)]);
}

bool connected(const UndirectedGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int cnt = 1;
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
  return cnt == n;
}

}  // namespace

UndirectedGraph watts_strogatz(int n, int k, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 1; j <= k / 2; ++j) {
        int t = (i + j) % n;
        adj[i][t] = adj[t][i] = 1;
      }
    for (int j = 1; j <= k / 2; ++j)
      for (int i = 0; i < n; ++i) {
        int t = (i + j) % n;
        if (coin(rng) >= p) continue;
        int w = uniform(rng, 0, n - 1);
        if (w == i || adj[i][w]) continue;
        adj[i][t] = adj[t][i] = 0;
        adj[i][w] = adj[w][i] = 1;
      }
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adj[i][j]) g.add_edge(i, j);
    if (connected(g)) return g;
  }
  throw Error(Errc::DegenerateParams, "could not draw a connected small world graph");
}

Digraph tree_to_digraph(const std::vector<std::vector<int>>& children, int root,
                        std::mt19937_64& rng) {
  int n = static_cast<int>(children.size());
  Digraph d(n);
  std::deque<int> q{root};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    const auto& ch = children[x];
    for (int c : ch) q.push_back(c);
    if (ch.empty()) continue;
    if (ch.size() == 1) {
      d.add_edge(x, ch[0]);
      d.add_edge(ch[0], x);
      continue;
    }
    std::vector<int> members{x};
    members.insert(members.end(), ch.begin(), ch.end());
    shuffle(members, rng);
    int total = static_cast<int>(members.size());
    int len = uniform(rng, 3, total);
    for (int i = 0; i < len; ++i) d.add_edge(members[i], members[(i + 1) % len]);
    int covered = len;
    while (covered < total) {
      int ear = uniform(rng, 1, total - covered);
      int a = members[uniform(rng, 0, covered - 1)];
      int b = a;
      while (b == a) b = members[uniform(rng, 0, covered - 1)];
      int prev = a;
      for (int i = 0; i < ear; ++i) {
        d.add_edge(prev, members[covered + i]);
        prev = members[covered + i];
      }
      d.add_edge(prev, b);
      covered += ear;
    }
  }
  return d;
}

Digraph gen_digraph(const GenParams& params) {
  int n = params.node_count;
  if (n < 3 || params.ws_k < 2 || params.ws_k % 2 != 0 || params.ws_k >= n || params.ws_p < 0 ||
      params.ws_p > 1)
    throw Error(Errc::DegenerateParams, "need n >= 3, even 2 <= k < n, p in [0,1]");
  std::mt19937_64 rng(params.seed);
  auto g = watts_strogatz(n, params.ws_k, params.ws_p, rng);

  // maximum spanning tree, edge weight = degree sum of the endpoints
  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(), [&](Edge a, Edge b) {
    auto w = [&](Edge e) { return g.adj(e.first).size() + g.adj(e.second).size(); };
    return w(a) > w(b);
  });
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  UndirectedGraph tree(n);
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a == b) continue;
    uf[a] = b;
    tree.add_edge(u, v);
  }
  std::vector<std::vector<int>> children(n);
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : tree.adj(x))
      if (!seen[y]) {
        seen[y] = 1;
        children[x].push_back(y);
        q.push_back(y);
      }
  }
  return tree_to_digraph(children, 0, rng);
}

Instance gen_instance(const Digraph& d, int agent_count, std::uint64_t seed) {
  int n = d.vertex_count();
  if (agent_count < 0 || agent_count > n - 2)
    throw Error(Errc::TooManyAgents, "at most |V|-2 agents");
  std::mt19937_64 rng(seed);
  std::vector<int> vs(n), ts(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::iota(ts.begin(), ts.end(), 0);
  shuffle(vs, rng);
  shuffle(ts, rng);
  std::vector<std::pair<int, int>> peb;
  Instance inst;
  inst.digraph = d;
  for (int i = 0; i < agent_count; ++i) {
    peb.emplace_back(i, vs[i]);
    inst.targets[i] = ts[i];
  }
  inst.start = Configuration::from_pebbles(n, peb);
  return inst;
}

SolveOutcome oracle_solve(const Instance& inst, long long state_cap) {
  validate_instance(inst);
  const Digraph& d = inst.digraph;
  int n = d.vertex_count();
  std::vector<int> ids;
  for (auto& [id, v] : inst.targets) ids.push_back(id);
  std::string start(n, '\0'), goal(n, '\0');
  for (size_t i = 0; i < ids.size(); ++i) {
    start[inst.start.pebble_position(ids[i])] = static_cast<char>(i + 1);
    goal[inst.targets.at(ids[i])] = static_cast<char>(i + 1);
  }
  SolveOutcome out;
  std::vector<std::string> states{start};
  std::vector<int> parent{-1};
  std::vector<Move> via{{-1, -1}};
  std::unordered_map<std::string, int> index{{start, 0}};
  int found = start == goal ? 0 : -1;
  for (size_t head = 0; head < states.size() && found < 0; ++head) {
    const std::string s = states[head];
    for (int u = 0; u < n && found < 0; ++u) {
      if (!s[u]) continue;
      for (int v : d.out(u)) {
        if (s[v]) continue;
        std::string t = s;
        std::swap(t[u], t[v]);
        if (index.count(t)) continue;
        if (static_cast<long long>(states.size()) >= state_cap)
          throw Error(Errc::StateSpaceTooLarge, "oracle state cap reached");
        index.emplace(t, static_cast<int>(states.size()));
        states.push_back(t);
        parent.push_back(static_cast<int>(head));
        via.push_back({u, v});
        if (t == goal) {
          found = static_cast<int>(states.size()) - 1;
          break;
        }
      }
    }
  }
  if (found < 0) {
    out.kind = SolveOutcome::Kind::Infeasible;
    out.reason = "target configuration unreachable";
    return out;
  }
  for (int x = found; parent[x] >= 0; x = parent[x]) out.plan.push_back(via[x]);
  std::reverse(out.plan.begin(), out.plan.end());
  out.kind = SolveOutcome::Kind::Feasible;
  out.stats.moves = static_cast<long long>(out.plan.size());
  return out;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2.0;
}

std::vector<BenchRecord> run_bench(const BenchSweep& sweep) {
  struct Job {
    int nodes, agents, rep;
  };
  std::vector<Job> jobs;
  for (int nn : sweep.nodes)
    for (int a : sweep.agents)
      for (int r = 0; r < sweep.reps; ++r) jobs.push_back({nn, a, r});
  std::vector<BenchRecord> out(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i; (i = next++) < jobs.size();) {
      const Job& j = jobs[i];
      BenchRecord& rec = out[i];
      rec.nodes = j.nodes;
      rec.agents = j.agents;
      rec.seed = splitmix(sweep.seed ^ splitmix(static_cast<std::uint64_t>(j.nodes) << 32 |
                                                static_cast<std::uint64_t>(j.agents) << 16 |
                                                static_cast<std::uint64_t>(j.rep)));
      try {
        GenParams gp;
        gp.node_count = j.nodes;
        gp.seed = rec.seed;
        auto d = gen_digraph(gp);
        auto inst = gen_instance(d, std::min(j.agents, j.nodes - 2), splitmix(rec.seed));
        auto t0 = std::chrono::steady_clock::now();
        auto res = solve(inst);
        auto t1 = std::chrono::steady_clock::now();
        rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rec.feasible = res.feasible();
        rec.moves = static_cast<long long>(res.plan.size());
        rec.failed = res.kind == SolveOutcome::Kind::Unsupported;
      } catch (const std::exception&) {
        rec.failed = true;
      }
    }
  };
  int t = sweep.threads > 0 ? sweep.threads
                            : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int i = 0; i < t; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  std::vector<BenchSummary> out;
  std::map<std::pair<int, int>, std::pair<std::vector<double>, std::vector<double>>> cells;
  for (const auto& r : records) {
    auto& c = cells[{r.nodes, r.agents}];
    if (r.failed || !r.feasible) continue;
    c.first.push_back(static_cast<double>(r.moves));
    c.second.push_back(r.ms);
  }
  for (auto& [key, c] : cells)
    out.push_back({key.first, key.second, median(c.first), median(c.second)});
  return out;
}

}  // namespace disc
