#include <doctest.h>

#include <random>

#include "disc/exchange.hpp"
#include "disc/lab.hpp"
#include "disc/sbd.hpp"
#include "fixtures.hpp"

using namespace disc;

namespace {

// Pebbles on every vertex except `holes`.
Configuration fill_except(int n, std::vector<int> holes) {
  std::vector<std::pair<int, int>> peb;
  int id = 0;
  for (int v = 0; v < n; ++v)
    if (std::find(holes.begin(), holes.end(), v) == holes.end()) peb.push_back({id++, v});
  return Configuration::from_pebbles(n, peb);
}

}  // namespace

TEST_SUITE("sbd_solver") {

TEST_CASE("pb-cycle solving keeps the cyclic order") {
  auto d = fx::five_cycle();
  auto c = make_component(d, {0, 1, 2, 3, 4});
  auto a = Configuration::from_pebbles(5, {{0, 1}});
  auto f = solve_pb_cycle(c, a, {{0, 4}});
  REQUIRE(f);
  CHECK(f->size() <= 3);
  CHECK(apply_plan(a, *f, d).pebble_position(0) == 4);
  auto same = solve_pb_cycle(c, a, {{0, 1}});
  REQUIRE(same);
  CHECK(apply_plan(a, *same, d).pebble_position(0) == 1);

  auto c4 = make_component(fx::cycle(4), {0, 1, 2, 3});
  auto two = Configuration::from_pebbles(4, {{0, 0}, {1, 2}});
  CHECK(solve_pb_cycle(c4, two, {{0, 1}, {1, 3}}));
  auto three = Configuration::from_pebbles(4, {{0, 0}, {1, 1}, {2, 2}});
  CHECK_FALSE(solve_pb_cycle(c4, three, {{0, 1}, {1, 0}, {2, 2}}));
  CHECK_FALSE(cyclic_order_matches({0, 1, 2, 3}, three, {{0, 1}, {1, 0}, {2, 2}}));
}

TEST_CASE("pb-cycle solving agrees with the oracle") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 300; ++it) {
    int n = 3 + it % 5;
    Digraph d = fx::cycle(n);
    for (int i = 0; i < n; ++i)
      if (rng() % 3 == 0) d.add_edge((i + 1) % n, i);
    if (n == 3 && d.edge_count() == 6) continue;
    auto c = make_component(d, [&] {
      std::vector<int> v(n);
      std::iota(v.begin(), v.end(), 0);
      return v;
    }());
    if (c.kind != ComponentKind::PartiallyBidirectionalCycle) continue;
    auto inst = fx::random_instance(d, 1 + it % 2, rng);
    auto f = solve_pb_cycle(c, inst.start, inst.targets);
    bool oracle = oracle_solve(inst).feasible();
    CHECK(f.has_value() == oracle);
    if (f) {
      auto b = apply_plan(inst.start, *f, d);
      for (auto [p, v] : inst.targets) CHECK(b.pebble_position(p) == v);
    }
  }
}

TEST_CASE("motion planning puts the pebble on its vertex") {
  std::mt19937_64 rng(4);
  auto oed = fx::oed_example();
  auto c = make_component(oed, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  for (int it = 0; it < 100; ++it) {
    auto a = fx::random_config(10, 1 + it % 3, rng);
    int v = static_cast<int>(rng() % 10);
    auto f = mpp_solve(c, a, 0, v);
    CHECK(apply_plan(a, f, oed).pebble_position(0) == v);
  }
  auto cyc = make_component(fx::five_cycle(), {0, 1, 2, 3, 4});
  auto a = Configuration::from_pebbles(5, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(mpp_solve(cyc, a, 2, 2).empty());
  CHECK(apply_plan(a, mpp_solve(cyc, a, 0, 3), fx::five_cycle()).pebble_position(0) == 3);
}

TEST_CASE("swap gadget exists on r-oed components") {
  auto oed = fx::oed_example();
  auto g = find_gadget(make_component(oed, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  REQUIRE(g);
  CHECK(g->basic_cycle.length() >= 3);
  CHECK(!g->ear.trivial());
  CHECK(g->basic_cycle.contains(g->ear.start()));
  CHECK(g->basic_cycle.contains(g->ear.end()));
}

TEST_CASE("entry swap on the three cycle chain") {
  auto d = fx::entry_example();
  std::vector<int> body{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  AttachedComponent ac{make_component(d, body), 0, 1, AttachedComponent::Mode::EntryEdge};
  auto a = fill_except(11, {9, 10});
  CHECK(a.pebble_position(0) == 0);
  auto f = entry_swap(ac, a, 9);
  CHECK(apply_plan(a, f, ac.digraph()) == swap_config(a, 0, 9));
}

TEST_CASE("entry swap into a triangle") {
  Digraph d(4);
  for (auto [x, y] : std::vector<Edge>{{1, 2}, {2, 3}, {3, 1}, {0, 1}, {1, 0}}) d.add_edge(x, y);
  AttachedComponent ac{make_component(d, {1, 2, 3}), 0, 1, AttachedComponent::Mode::EntryEdge};
  for (int w : {1, 2, 3})
    for (int h2 : {1, 2, 3}) {
      if (h2 == w) continue;
      auto a = fill_except(4, {w, h2});
      auto f = entry_swap(ac, a, w);
      CHECK(apply_plan(a, f, ac.digraph()) == swap_config(a, 0, w));
    }
}

TEST_CASE("stay-in swap on the ten vertex example") {
  auto oed = fx::oed_example();
  auto c = make_component(oed, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  // pebble at 2, hole at 9, second hole anywhere else
  for (int h2 = 0; h2 < 10; ++h2) {
    if (h2 == 1 || h2 == 8) continue;
    auto a = fill_except(10, {8, h2});
    auto f = stay_in_swap(c, a, 1, 8);
    CHECK(apply_plan(a, f, oed) == swap_config(a, 1, 8));
  }
  auto pb = make_component(fx::five_cycle(), {0, 1, 2, 3, 4});
  CHECK_THROWS_AS(stay_in_swap(pb, fill_except(5, {2, 3}), 1, 2), Error);
  CHECK_THROWS_AS(stay_in_swap(c, fill_except(10, {8}), 1, 8), Error);
}

TEST_CASE("attached edge on a 6-cycle") {
  auto d = fx::attached_example();
  AttachedComponent ac{make_component(d, {0, 1, 2, 3, 4, 5}), 6, 4,
                       AttachedComponent::Mode::AttachedEdge};
  // p1..p4 on 0, 1, 3, 4; p on 5 (u); holes on 2 (w) and 6 (v)
  auto a = Configuration::from_pebbles(7, {{1, 0}, {2, 1}, {3, 3}, {4, 4}, {0, 5}});
  auto f = attached_edge_swap(ac, a, 5, 2);
  auto b = apply_plan(a, f, d);
  CHECK(b == swap_config(a, 5, 2));
  CHECK(b.pebble_position(0) == 2);
  for (int p = 1; p <= 4; ++p) CHECK(b.pebble_position(p) == a.pebble_position(p));
}

TEST_CASE("two component swap across an articulation point") {
  auto d = fx::composed_example();
  auto dec = decompose(d);
  // p at 7 (block 6..11), hole at 12 (block 11..13), second hole on 1
  auto a = fill_except(13, {11, 0});
  auto f = two_bcc_swap(d, dec, a, 6, 11);
  CHECK(apply_plan(a, f, d) == swap_config(a, 6, 11));
  CHECK_THROWS_AS(two_bcc_swap(d, dec, a, 0, 11), Error);
}

TEST_CASE("entry swap over a one-way entry edge") {
  Digraph d(4);
  for (auto [x, y] : std::vector<Edge>{{1, 2}, {2, 3}, {3, 1}, {2, 1}, {0, 1}}) d.add_edge(x, y);
  AttachedComponent ac{make_component(d, {1, 2, 3}), 0, 1, AttachedComponent::Mode::EntryEdge};
  for (int w : {1, 2, 3})
    for (int h2 : {1, 2, 3}) {
      if (h2 == w) continue;
      auto a = fill_except(4, {w, h2});
      CHECK(apply_plan(a, entry_swap(ac, a, w), ac.digraph()) == swap_config(a, 0, w));
    }
}

TEST_CASE("attached edge with the second hole outside the component") {
  auto oed = fx::oed_example();
  Digraph d(11);
  for (auto [x, y] : oed.edges()) d.add_edge(x, y);
  d.add_edge(10, 0);
  d.add_edge(0, 10);
  std::vector<int> body{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  AttachedComponent ac{make_component(d, body), 10, 0, AttachedComponent::Mode::AttachedEdge};
  REQUIRE(ac.component.kind == ComponentKind::RegularOed);
  auto a = fill_except(11, {2, 10});
  auto f = attached_edge_swap(ac, a, 1, 2);
  CHECK(apply_plan(a, f, d) == swap_config(a, 1, 2));
}

TEST_CASE("labelled exchange by search") {
  Digraph k3(3);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v) k3.add_edge(u, v);
  auto a = fill_except(3, {1, 2});
  auto f = labelled_exchange(k3, a, 0, 1, {0, 1, 2});
  REQUIRE(f);
  CHECK(apply_plan(a, *f, k3) == swap_config(a, 0, 1));
  auto c3 = fx::cycle(3);
  CHECK(labelled_exchange(c3, a, 0, 1, {0, 1, 2}) == Plan{{0, 1}});
  // one hole on a directed 4-cycle: the pebble order cannot flip
  auto c4 = fx::cycle(4);
  auto b = fill_except(4, {3});
  CHECK(labelled_exchange(c4, b, 0, 3, {0, 1, 2, 3}));
  CHECK_FALSE(labelled_exchange(c4, b, 1, 3, {0, 1, 2, 3}));
}

}  // TEST_SUITE
