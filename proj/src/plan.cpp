#include "disc/plan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace disc {

std::ostream& operator<<(std::ostream& os, const AgentLabel& a) {
  return os << (a.is_hole() ? 'h' : 'p') << a.id;
}

Configuration::Configuration(int n, const std::vector<std::pair<AgentLabel, int>>& assignment) {
  if (static_cast<int>(assignment.size()) != n)
    throw Error(Errc::BadInput, "configuration must place exactly one agent per vertex");
  std::vector<std::pair<AgentLabel, int>> sorted = assignment;
  std::sort(sorted.begin(), sorted.end());
  auto labels = std::make_shared<std::vector<AgentLabel>>();
  tok_at_.assign(n, -1);
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    auto [lab, v] = sorted[i];
    if (i > 0 && sorted[i - 1].first == lab)
      throw Error(Errc::BadInput, "duplicate agent label");
    if (v < 0 || v >= n) throw Error(Errc::BadInput, "agent placed outside the graph");
    if (tok_at_[v] != -1)
      throw Error(Errc::BadInput, "vertex " + std::to_string(v) + " holds two agents");
    labels->push_back(lab);
    tok_at_[v] = i;
    pos_[i] = v;
    if (lab.is_hole()) ++hole_count_;
  }
  labels_ = std::move(labels);
}

Configuration Configuration::from_pebbles(int n, const std::vector<std::pair<int, int>>& pebbles) {
  std::vector<std::pair<AgentLabel, int>> as;
  std::vector<char> used(n, 0);
  for (auto [id, v] : pebbles) {
    if (v < 0 || v >= n) throw Error(Errc::BadInput, "pebble outside the graph");
    if (used[v]) throw Error(Errc::BadInput, "two pebbles on vertex " + std::to_string(v));
    used[v] = 1;
    as.emplace_back(AgentLabel::pebble(id), v);
  }
  int h = 0;
  for (int v = 0; v < n; ++v)
    if (!used[v]) as.emplace_back(AgentLabel::hole(h++), v);
  return Configuration(n, as);
}

int Configuration::position(const AgentLabel& a) const {
  if (!labels_) return -1;
  auto it = std::lower_bound(labels_->begin(), labels_->end(), a);
  if (it == labels_->end() || *it != a) return -1;
  return pos_[it - labels_->begin()];
}

std::vector<int> Configuration::hole_vertices() const {
  std::vector<int> r;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_hole(v)) r.push_back(v);
  return r;
}

void Configuration::swap_vertices(int u, int v) {
  std::swap(tok_at_[u], tok_at_[v]);
  pos_[tok_at_[u]] = u;
  pos_[tok_at_[v]] = v;
}

bool Configuration::operator==(const Configuration& o) const {
  if (tok_at_ != o.tok_at_) return false;
  if (labels_ == o.labels_) return true;
  if (!labels_ || !o.labels_) return false;
  return *labels_ == *o.labels_;
}

Configuration swap_config(const Configuration& a, int u, int v) {
  Configuration r = a;
  if (u != v) r.swap_vertices(u, v);
  return r;
}

void apply_move_inplace(Configuration& a, Move m, const Digraph& d, int index) {
  if (!d.has_edge(m.from, m.to))
    throw Error(Errc::NoSuchEdge,
                "move " + std::to_string(m.from) + "->" + std::to_string(m.to) +
                    (index >= 0 ? " at index " + std::to_string(index) : ""),
                index);
  if (!a.is_hole(m.to))
    throw Error(Errc::TargetOccupied,
                "move " + std::to_string(m.from) + "->" + std::to_string(m.to) +
                    (index >= 0 ? " at index " + std::to_string(index) : ""),
                index);
  a.swap_vertices(m.from, m.to);
}

Configuration apply_move(const Configuration& a, Move m, const Digraph& d) {
  Configuration r = a;
  apply_move_inplace(r, m, d);
  return r;
}

Configuration apply_plan(const Configuration& a, const Plan& f, const Digraph& d) {
  Configuration r = a;
  for (size_t i = 0; i < f.size(); ++i) apply_move_inplace(r, f[i], d, static_cast<int>(i));
  return r;
}

Plan reverse_move(const Digraph& d, Move m) {
  auto back = shortest_path(d, m.to, m.from);
  if (back.empty())
    throw Error(Errc::NotStronglyConnected, "no return path for reverse move");
  // ring r0 = from, r1 = to, then the rest of the return path
  std::vector<int> ring{m.from};
  for (size_t i = 0; i + 1 < back.size(); ++i) ring.push_back(back[i]);
  int l = static_cast<int>(ring.size());
  Plan out;
  // the hole now sits at r0; finishing this rotation walks it back to r1
  int h = 0;
  auto step = [&]() {
    int p = (h - 1 + l) % l;
    out.push_back({ring[p], ring[h]});
    h = p;
  };
  for (int i = 0; i < l - 2; ++i) step();
  // hole is at r2 now (or r0 when l == 2); l-1 full shifts restore everything
  for (int r = 0; r < l - 1; ++r)
    for (int i = 0; i < l - 1; ++i) step();
  return out;
}

Plan reverse_plan(const Digraph& d, const Configuration& a, const Plan& f) {
  if (!is_strongly_connected(d))
    throw Error(Errc::NotStronglyConnected, "reverse_plan needs strong connectivity");
  try {
    (void)apply_plan(a, f, d);
  } catch (const Error& e) {
    throw Error(Errc::InvalidPlan, e.what(), e.move_index());
  }
  Plan out;
  for (size_t i = f.size(); i-- > 0;) append(out, reverse_move(d, f[i]));
  return out;
}

namespace {

// Runs a plan on token identities for one hole pattern. Empty when undefined.
bool run_pattern(const Digraph& d, unsigned mask, const Plan& f, std::vector<int>& tok) {
  int n = d.vertex_count();
  tok.resize(n);
  std::iota(tok.begin(), tok.end(), 0);
  auto hole = [&](int t) { return (mask >> t) & 1u; };
  for (auto m : f) {
    if (!d.has_edge(m.from, m.to)) return false;
    if (!hole(tok[m.to])) return false;
    std::swap(tok[m.from], tok[m.to]);
  }
  return true;
}

}  // namespace

bool plans_equivalent(const Digraph& d, const Plan& f, const Plan& g) {
  int n = d.vertex_count();
  if (n > 20) throw Error(Errc::StateSpaceTooLarge, "plans_equivalent is for small graphs");
  // Moves only look at which agents are holes; the agent permutation then
  // decides the result, so hole patterns times identity labels cover all cases.
  std::vector<int> a, b;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool fa = run_pattern(d, mask, f, a);
    bool fb = run_pattern(d, mask, g, b);
    if (fa != fb) return false;
    if (fa && a != b) return false;
  }
  return true;
}

}  // namespace disc
