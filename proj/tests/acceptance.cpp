// Acceptance run: prints one PASS/FAIL line per criterion, exit code 1 on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>

#include "disc/lab.hpp"
#include "disc/primitives.hpp"
#include "disc/sbd.hpp"
#include "disc/solver.hpp"
#include "disc/tree.hpp"
#include "fixtures.hpp"

using namespace disc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

bool is_pb_cycle(const Digraph& d) {
  auto dec = decompose(d);
  return dec.components.size() == 1 &&
         static_cast<int>(dec.components[0].vertices.size()) == d.vertex_count() &&
         dec.components[0].kind == ComponentKind::PartiallyBidirectionalCycle;
}

// Least squares polynomial fit, returns R^2. x is rescaled to [0,1] first.
double poly_r2(const std::vector<double>& xs, const std::vector<double>& ys, int deg) {
  size_t n = xs.size();
  double lo = *std::min_element(xs.begin(), xs.end());
  double hi = *std::max_element(xs.begin(), xs.end());
  int m = deg + 1;
  std::vector<std::vector<double>> A(m, std::vector<double>(m + 1, 0.0));
  for (size_t i = 0; i < n; ++i) {
    double x = hi > lo ? (xs[i] - lo) / (hi - lo) : 0.0;
    std::vector<double> p(m, 1.0);
    for (int k = 1; k < m; ++k) p[k] = p[k - 1] * x;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) A[r][c] += p[r] * p[c];
      A[r][m] += p[r] * ys[i];
    }
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    if (std::fabs(A[col][col]) < 1e-12) continue;
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      double f = A[r][col] / A[col][col];
      for (int c = col; c <= m; ++c) A[r][c] -= f * A[col][c];
    }
  }
  std::vector<double> coef(m, 0.0);
  for (int k = 0; k < m; ++k)
    if (std::fabs(A[k][k]) >= 1e-12) coef[k] = A[k][m] / A[k][k];
  double mean = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double ss_tot = 0, ss_res = 0;
  for (size_t i = 0; i < n; ++i) {
    double x = hi > lo ? (xs[i] - lo) / (hi - lo) : 0.0, y = 0, p = 1;
    for (int k = 0; k < m; ++k, p *= x) y += coef[k] * p;
    ss_res += (ys[i] - y) * (ys[i] - y);
    ss_tot += (ys[i] - mean) * (ys[i] - mean);
  }
  return ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
}

// best R^2 over degrees 1..3, and the degree reaching it
std::pair<double, int> best_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::pair<double, int> best{-1e9, 0};
  for (int deg = 1; deg <= 3; ++deg) best = std::max(best, {poly_r2(xs, ys, deg), deg});
  return best;
}

// ---------------------------------------------------------------- 1 and 3

struct SmallCase {
  Instance inst;
  bool truth;
};

std::vector<SmallCase> small_cases;

void criterion1() {
  std::mt19937_64 rng(20240601);
  const int wanted = 12000;
  int agree = 0, feasible = 0;
  auto t0 = Clock::now();
  std::string first_bad;
  for (int it = 0; it < wanted; ++it) {
    int n = 2 + it % 5;
    auto d = fx::random_sc(n, rng, 0.05 + 0.1 * (it % 4));
    int h = 1 + (it / 5) % 3;
    if (h >= n) h = n - 1;
    auto inst = fx::random_instance(d, h, rng);
    bool truth = oracle_solve(inst).feasible();
    bool mine = check_feasibility(inst);
    feasible += truth;
    if (mine == truth)
      ++agree;
    else if (first_bad.empty())
      first_bad = fmt(" first mismatch at case %d", it);
    small_cases.push_back({inst, truth});
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  report(1, agree == wanted,
         fmt("feasibility agrees with the oracle on %d/%d small instances (%d feasible, %.1fs)%s",
             agree, wanted, feasible, s, first_bad.c_str()));
}

void criterion3() {
  int total = 0, solved = 0, pb = 0;
  for (const auto& sc : small_cases) {
    if (!sc.truth) continue;
    int h = sc.inst.start.hole_count();
    bool pbc = is_pb_cycle(sc.inst.digraph);
    if (h < 2 && !pbc) continue;
    ++total;
    pb += pbc;
    try {
      auto out = solve(sc.inst);
      if (out.feasible() && verify(sc.inst, out.plan)) ++solved;
    } catch (const Error&) {
    }
  }
  report(3, solved == total && total > 0,
         fmt("solved and verified %d/%d oracle-feasible instances (%d on pb-cycles)", solved,
             total, pb));
}

// ---------------------------------------------------------------- 2

void criterion2() {
  int ok = 0, total = 0, exceptions = 0, infeasible = 0;
  auto t0 = Clock::now();
  for (int n : {20, 40, 60, 80, 100})
    for (std::uint64_t rep = 0; rep < 200; ++rep) {
      ++total;
      GenParams gp;
      gp.node_count = n;
      gp.seed = 1000 * n + rep;
      try {
        auto d = gen_digraph(gp);
        auto inst = gen_instance(d, 10, gp.seed * 31 + 7);
        auto out = solve(inst);
        if (!out.feasible()) {
          ++infeasible;
          continue;
        }
        if (verify(inst, out.plan)) ++ok;
      } catch (const Error&) {
        ++exceptions;
      }
    }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  report(2, ok == total && exceptions == 0,
         fmt("%d/%d generated instances solved with verified plans, %d infeasible, %d exceptions "
             "(%.1fs)",
             ok, total, infeasible, exceptions, s));
}

// ---------------------------------------------------------------- 4

void criterion4() {
  Instance inst;
  inst.digraph = fx::five_cycle();
  inst.start = Configuration::from_pebbles(5, {{0, 1}});
  inst.targets = {{0, 4}};
  auto out = solve(inst);
  // the reduction route: tree path through the star, then converted back
  auto g = underlying_graph(inst.digraph);
  auto t = build_bct(g);
  auto lifted = lift_config(inst.start);
  auto [pre, after] = pmt_to_ppt(t, lifted, inst.targets);
  auto rest = ppt_solve(t, after, inst.targets);
  TreePlan tp = pre;
  tp.insert(tp.end(), rest.begin(), rest.end());
  auto reduced = convert_path(tp, inst.digraph, decompose(inst.digraph), t, inst.start);
  Plan eight{{1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}};
  int steps = 0;
  if (out.feasible()) {
    auto cur = inst.start;
    for (auto m : out.plan) {
      steps += m.from == cur.pebble_position(0);
      apply_move_inplace(cur, m, inst.digraph);
    }
  }
  bool ok = out.feasible() && verify(inst, out.plan) && verify(inst, eight) && steps <= 3 &&
            out.plan.size() < eight.size();
  report(4, ok,
         fmt("direct plan has %zu moves (%d advancing the pebble) vs the 8-move reduction plan; "
             "tree route converts to %zu moves",
             out.plan.size(), steps, reduced.size()));
}

// ---------------------------------------------------------------- 5

// Labelled reachability inside the whole digraph; used only to explain misses.
bool reachable(const Digraph& d, const Configuration& a, const Configuration& b) {
  auto key = [](const Configuration& c) {
    std::string s;
    for (int v = 0; v < c.vertex_count(); ++v) s += static_cast<char>(c.token_at(v) + 64);
    return s;
  };
  std::unordered_set<std::string> seen{key(a)};
  std::queue<Configuration> q;
  q.push(a);
  std::string goal = key(b);
  while (!q.empty()) {
    auto c = q.front();
    q.pop();
    if (key(c) == goal) return true;
    if (seen.size() > 3'000'000) return true;  // give the benefit of the doubt
    for (int v : c.hole_vertices())
      for (int u : d.in(v)) {
        auto e = c;
        e.swap_vertices(u, v);
        if (seen.insert(key(e)).second) q.push(e);
      }
  }
  return false;
}

// Pebbles everywhere except the listed holes; pebble ids follow vertex order.
Configuration fill_except(int n, const std::vector<int>& holes) {
  std::vector<std::pair<int, int>> peb;
  int id = 0;
  for (int v = 0; v < n; ++v)
    if (std::find(holes.begin(), holes.end(), v) == holes.end()) peb.push_back({id++, v});
  return Configuration::from_pebbles(n, peb);
}

// Strongly biconnected digraph on n vertices: a base cycle plus open ears,
// with some reversed edges.
Digraph random_component(int n, std::mt19937_64& rng) {
  int base = std::uniform_int_distribution<int>(3, n)(rng);
  Digraph d(n);
  for (int i = 0; i < base; ++i) d.add_edge(i, (i + 1) % base);
  int next = base;
  while (next < n || rng() % 3 == 0) {
    int s = static_cast<int>(rng() % next), e = static_cast<int>(rng() % next);
    if (s == e) continue;
    int k = next < n ? std::uniform_int_distribution<int>(1, n - next)(rng) : 0;
    if (k == 0) {
      if (!d.has_edge(s, e)) d.add_edge(s, e);
      if (next >= n) break;
      continue;
    }
    int prev = s;
    for (int i = 0; i < k; ++i) {
      d.add_edge(prev, next);
      prev = next++;
    }
    d.add_edge(prev, e);
  }
  for (auto [u, v] : d.edges())
    if (rng() % 5 == 0 && !d.has_edge(v, u)) d.add_edge(v, u);
  return d;
}

std::vector<Digraph> component_pool(int max_n, int random_count, std::uint64_t seed) {
  std::vector<Digraph> pool;
  // every partially bidirectional cycle up to 5 vertices, a sample above that
  std::mt19937_64 rng(seed);
  for (int n = 3; n <= std::min(max_n, 7); ++n) {
    int masks = 1 << n;
    for (int m = 0; m < masks; ++m) {
      if (n > 5 && rng() % 16 != 0) continue;
      Digraph d = fx::cycle(n);
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) d.add_edge((i + 1) % n, i);
      pool.push_back(d);
    }
  }
  for (int i = 0; i < random_count; ++i)
    pool.push_back(random_component(4 + i % (max_n - 3), rng));
  return pool;
}

Component whole(const Digraph& d) {
  std::vector<int> vs(d.vertex_count());
  std::iota(vs.begin(), vs.end(), 0);
  return make_component(d, vs);
}

Digraph with_external(const Digraph& b, int z, bool both) {
  Digraph d(b.vertex_count() + 1);
  for (auto [u, v] : b.edges()) d.add_edge(u, v);
  int v = b.vertex_count();
  d.add_edge(v, z);
  if (both) d.add_edge(z, v);
  return d;
}

struct Tally {
  long total = 0, ok = 0, impossible = 0;
  std::string first;
  void run(const Digraph& d, const Configuration& a, int x, int y,
           const std::function<Plan()>& make) {
    ++total;
    auto want = swap_config(a, x, y);
    try {
      if (apply_plan(a, make(), d) == want) {
        ++ok;
        return;
      }
    } catch (const Error& e) {
      if (first.empty()) first = e.what();
    }
    if (!reachable(d, a, want)) ++impossible;
  }
  std::string line(const char* name) const {
    return fmt("%s %ld/%ld", name, ok, total) +
           (ok < total ? fmt(" (%ld of the misses are unreachable; first error: %s)", impossible,
                             first.empty() ? "wrong result" : first.c_str())
                       : "");
  }
};

void criterion5() {
  auto t0 = Clock::now();
  auto pool = component_pool(8, 60, 5);
  Tally entry, stay, attached, two;

  for (const auto& b : pool) {
    int n = b.vertex_count();
    auto comp = whole(b);
    if (comp.kind != ComponentKind::PartiallyBidirectionalCycle) {
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
          for (int h2 = 0; h2 < n; ++h2) {
            if (v == w || h2 == v || h2 == w) continue;
            auto a = fill_except(n, {w, h2});
            stay.run(b, a, v, w, [&] { return stay_in_swap(comp, a, v, w); });
          }
    }
    if (n > 7) continue;
    for (int z = 0; z < n; ++z)
      for (bool both : {false, true}) {
        auto d = with_external(b, z, both);
        std::vector<int> body(n);
        std::iota(body.begin(), body.end(), 0);
        auto mode = both ? AttachedComponent::Mode::AttachedEdge
                         : AttachedComponent::Mode::EntryEdge;
        AttachedComponent ac{make_component(d, body), n, z, mode};
        if (!both) {
          for (int w = 0; w < n; ++w)
            for (int h2 = 0; h2 < n; ++h2) {
              if (h2 == w) continue;
              auto a = fill_except(n + 1, {w, h2});
              entry.run(d, a, n, w, [&] { return entry_swap(ac, a, w); });
            }
        } else {
          for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w)
              for (int h2 = 0; h2 <= n; ++h2) {
                if (u == w || h2 == u || h2 == w) continue;
                auto a = fill_except(n + 1, {w, h2});
                attached.run(d, a, u, w, [&] { return attached_edge_swap(ac, a, u, w); });
              }
        }
      }
  }

  // two blocks glued at one vertex, each at most 5 vertices
  std::vector<Digraph> small;
  for (const auto& b : pool)
    if (b.vertex_count() <= 5) small.push_back(b);
  std::mt19937_64 rng(9);
  for (int pair = 0; pair < 60; ++pair) {
    const auto& b1 = small[rng() % small.size()];
    const auto& b2 = small[rng() % small.size()];
    int n1 = b1.vertex_count(), n2 = b2.vertex_count(), n = n1 + n2 - 1;
    int art = static_cast<int>(rng() % n1);
    auto map2 = [&](int x) { return x == 0 ? art : n1 + x - 1; };
    Digraph d(n);
    for (auto [u, v] : b1.edges()) d.add_edge(u, v);
    for (auto [u, v] : b2.edges()) d.add_edge(map2(u), map2(v));
    auto dec = decompose(d);
    std::vector<int> side1, side2;
    for (int x = 0; x < n1; ++x)
      if (x != art) side1.push_back(x);
    for (int x = n1; x < n; ++x) side2.push_back(x);
    for (int dir = 0; dir < 2; ++dir) {
      const auto& from = dir ? side2 : side1;
      const auto& to = dir ? side1 : side2;
      for (int av : from)
        for (int bv : to)
          for (int h2 = 0; h2 < n; ++h2) {
            if (h2 == av || h2 == bv) continue;
            auto a = fill_except(n, {bv, h2});
            two.run(d, a, av, bv, [&] { return two_bcc_swap(d, dec, a, av, bv); });
          }
    }
  }

  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  bool ok = entry.ok == entry.total && stay.ok == stay.total && attached.ok == attached.total &&
            two.ok == two.total;
  report(5, ok,
         entry.line("entry") + ", " + stay.line("stay-in") + ", " +
             attached.line("attached-edge") + ", " + two.line("two-block") +
             fmt(" over %zu components (%.1fs)", pool.size(), s));
}

// ---------------------------------------------------------------- 6

void criterion6() {
  std::mt19937_64 rng(66);
  int cases = 0, ok = 0, laps = 0, laps_ok = 0, tries = 0;
  while (cases < 500 && tries < 100000) {
    ++tries;
    int n = 4 + static_cast<int>(rng() % 7);
    auto d = random_component(n, rng);
    auto comp = whole(d);
    if (comp.kind == ComponentKind::PartiallyBidirectionalCycle) continue;
    auto ed = open_ear_decomposition(comp);
    int v = static_cast<int>(rng() % n), w = static_cast<int>(rng() % n);
    if (v == w) continue;
    auto seq = cycle_sequence(comp, ed, v, w);
    // one hole in every cycle keeps each rotation defined
    auto a = fx::random_config(n, 1 + static_cast<int>(rng() % 3), rng);
    bool holes_everywhere = true;
    for (const auto& c : seq.cycles) {
      bool any = false;
      for (int x : c.ring) any |= a.is_hole(x);
      holes_everywhere &= any;
    }
    if (!holes_everywhere) continue;
    RotationSpec spec;
    spec.cycles = seq.cycles;
    for (const auto& c : seq.cycles) spec.amounts.push_back(static_cast<int>(rng() % (c.length() + 1)));
    Configuration b;
    try {
      b = apply_plan(a, composite_rotation(a, spec), d);
    } catch (const Error&) {
      continue;  // a later cycle lost its hole to an earlier rotation
    }
    ++cases;
    try {
      if (apply_plan(b, composite_rotation(b, inverse_rotation(spec)), d) == a) ++ok;
    } catch (const Error&) {
    }
    for (const auto& c : seq.cycles) {
      ++laps;
      try {
        if (apply_plan(a, cycle_rotation(a, c, c.length()), d) == a) ++laps_ok;
      } catch (const Error&) {
      }
    }
  }
  report(6, cases == 500 && ok == cases && laps_ok == laps,
         fmt("%d/%d rotation sequences undone by their inverse; %d/%d full laps are the identity",
             ok, cases, laps_ok, laps));
}

// ---------------------------------------------------------------- 7

void criterion7() {
  std::mt19937_64 rng(77);
  int ok = 0;
  long moves = 0;
  for (int it = 0; it < 1000; ++it) {
    int n = 3 + static_cast<int>(rng() % 10);
    auto d = fx::random_sc(n, rng, 0.2);
    auto a = fx::random_config(n, 1 + static_cast<int>(rng() % std::min(4, n - 1)), rng);
    auto f = fx::random_plan(d, a, 1 + static_cast<int>(rng() % 30), rng);
    moves += static_cast<long>(f.size());
    try {
      auto b = apply_plan(a, f, d);
      if (apply_plan(b, reverse_plan(d, a, f), d) == a) ++ok;
    } catch (const Error&) {
    }
  }
  report(7, ok == 1000,
         fmt("%d/1000 random plans undone exactly by their reverse (%ld forward moves)", ok,
             moves));
}

// ---------------------------------------------------------------- 8 and 9

void criterion8() {
  auto t0 = Clock::now();
  BenchSweep nodes;
  for (int n = 20; n <= 100; n += 10) nodes.nodes.push_back(n);
  nodes.agents = {10};
  nodes.reps = 200;
  nodes.threads = 1;
  auto ns = summarize(run_bench(nodes));
  BenchSweep agents;
  agents.nodes = {40};
  for (int k = 1; k <= 14; ++k) agents.agents.push_back(k);
  agents.reps = 200;
  agents.threads = 1;
  auto as = summarize(run_bench(agents));

  std::vector<double> x, ms, mv, ax, amv;
  double at50 = 0, at100 = 0;
  for (const auto& s : ns) {
    x.push_back(s.nodes);
    ms.push_back(s.median_ms);
    mv.push_back(s.median_moves);
    if (s.nodes == 50) at50 = s.median_ms;
    if (s.nodes == 100) at100 = s.median_ms;
  }
  for (const auto& s : as) {
    ax.push_back(s.agents);
    amv.push_back(s.median_moves);
  }
  auto [r_ms, d_ms] = best_fit(x, ms);
  auto [r_mv, d_mv] = best_fit(x, mv);
  auto [r_a, d_a] = best_fit(ax, amv);
  double ratio = at50 > 0 ? at100 / at50 : 1e9;
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  bool ok = r_ms >= 0.9 && r_mv >= 0.9 && r_a >= 0.9 && ratio < 20;
  std::string curve = "; node medians (moves/ms):";
  for (const auto& r : ns) curve += fmt(" %d:%.0f/%.2f", r.nodes, r.median_moves, r.median_ms);
  curve += "; agent medians:";
  for (const auto& r : as) curve += fmt(" %d:%.0f", r.agents, r.median_moves);
  report(8, ok,
         fmt("R^2 runtime %.3f (deg %d), moves %.3f (deg %d), agent moves %.3f (deg %d); "
             "runtime 100/50 nodes = %.2f (%.1fs)",
             r_ms, d_ms, r_mv, d_mv, r_a, d_a, ratio, s) +
             curve);
}

void criterion9() {
  std::vector<double> x, med;
  for (int n = 20; n <= 100; n += 10) {
    std::vector<double> times;
    for (std::uint64_t rep = 0; rep < 200; ++rep) {
      GenParams gp;
      gp.node_count = n;
      gp.seed = 7000 + 1000 * n + rep;
      auto inst = gen_instance(gen_digraph(gp), 10, gp.seed);
      const int inner = 20;
      auto t0 = Clock::now();
      int yes = 0;
      for (int i = 0; i < inner; ++i) yes += check_feasibility(inst);
      auto us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count() / inner;
      if (yes < 0) std::puts("");
      times.push_back(us);
    }
    x.push_back(n);
    med.push_back(median(times));
  }
  double r2 = poly_r2(x, med, 1);
  std::string curve;
  for (size_t i = 0; i < x.size(); ++i) curve += fmt(" %.0f:%.1fus", x[i], med[i]);
  report(9, r2 >= 0.9, fmt("linear fit of median feasibility time R^2 = %.3f;", r2) + curve);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
