#pragma once

#include <memory>
#include <ostream>
#include <utility>
#include <vector>

#include "disc/graph.hpp"

namespace disc {

struct AgentLabel {
  enum class Kind { Pebble, Hole };
  Kind kind = Kind::Pebble;
  int id = 0;

  static AgentLabel pebble(int id) { return {Kind::Pebble, id}; }
  static AgentLabel hole(int id) { return {Kind::Hole, id}; }
  bool is_hole() const { return kind == Kind::Hole; }

  auto operator<=>(const AgentLabel&) const = default;
};

std::ostream& operator<<(std::ostream& os, const AgentLabel& a);

// Bijection from agent labels to vertices. Labels are fixed at construction;
// positions change through swap_vertices only.
class Configuration {
 public:
  Configuration() = default;
  Configuration(int n, const std::vector<std::pair<AgentLabel, int>>& assignment);

  // Pebbles as (id, vertex); remaining vertices get holes 0,1,... by vertex id.
  static Configuration from_pebbles(int n, const std::vector<std::pair<int, int>>& pebbles);

  int vertex_count() const { return static_cast<int>(tok_at_.size()); }
  const AgentLabel& at(int v) const { return (*labels_)[tok_at_[v]]; }
  bool is_hole(int v) const { return at(v).is_hole(); }
  // -1 when the label is unknown
  int position(const AgentLabel& a) const;
  int pebble_position(int id) const { return position(AgentLabel::pebble(id)); }
  const std::vector<AgentLabel>& labels() const { return *labels_; }
  std::vector<int> hole_vertices() const;
  int hole_count() const { return hole_count_; }
  int pebble_count() const { return vertex_count() - hole_count_; }

  void swap_vertices(int u, int v);

  // token index bookkeeping, exposed for fast inner loops
  int token_at(int v) const { return tok_at_[v]; }
  const std::vector<int>& token_positions() const { return pos_; }

  bool operator==(const Configuration& o) const;
  bool operator!=(const Configuration& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const std::vector<AgentLabel>> labels_;  // sorted
  std::vector<int> tok_at_;
  std::vector<int> pos_;
  int hole_count_ = 0;
};

struct Move {
  int from = 0;
  int to = 0;
  auto operator<=>(const Move&) const = default;
};

using Plan = std::vector<Move>;

inline void append(Plan& a, const Plan& b) { a.insert(a.end(), b.begin(), b.end()); }

Configuration swap_config(const Configuration& a, int u, int v);
Configuration apply_move(const Configuration& a, Move m, const Digraph& d);
// Applies in place; throws with the given index on failure.
void apply_move_inplace(Configuration& a, Move m, const Digraph& d, int index = -1);
Configuration apply_plan(const Configuration& a, const Plan& f, const Digraph& d);
Plan reverse_plan(const Digraph& d, const Configuration& a, const Plan& f);
bool plans_equivalent(const Digraph& d, const Plan& f, const Plan& g);

// Inverse of one move, given only the geometry: every agent on the closing
// cycle returns to where it was before the move.
Plan reverse_move(const Digraph& d, Move m);

}  // namespace disc
