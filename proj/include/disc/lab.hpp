#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "disc/instance.hpp"

namespace disc {

struct GenParams {
  int node_count = 20;
  std::uint64_t seed = 1;
  int ws_k = 4;
  double ws_p = 0.3;
};

// Undirected Watts-Strogatz small world graph, resampled until connected.
UndirectedGraph watts_strogatz(int n, int k, double p, std::mt19937_64& rng);

// Turns a rooted tree (children lists) into a strongly connected digraph: a
// node with several children becomes, together with them, a directed cycle plus
// random ears; single-child edges become bidirectional pairs.
Digraph tree_to_digraph(const std::vector<std::vector<int>>& children, int root,
                        std::mt19937_64& rng);

Digraph gen_digraph(const GenParams& params);
Instance gen_instance(const Digraph& d, int agent_count, std::uint64_t seed);

// Exhaustive BFS over configurations (holes unlabeled). Throws
// StateSpaceTooLarge once more than `state_cap` states are discovered.
SolveOutcome oracle_solve(const Instance& inst, long long state_cap = 1'000'000);

struct BenchRecord {
  int nodes = 0;
  int agents = 0;
  std::uint64_t seed = 0;
  long long moves = 0;
  double ms = 0.0;
  bool feasible = false;
  bool failed = false;  // exception or unsupported outcome
};

struct BenchSweep {
  std::vector<int> nodes;
  std::vector<int> agents;
  int reps = 200;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency
};

struct BenchSummary {
  int nodes = 0;
  int agents = 0;
  double median_moves = 0.0;
  double median_ms = 0.0;
};

// Records come back ordered by (nodes, agents, rep).
std::vector<BenchRecord> run_bench(const BenchSweep& sweep);
std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);
double median(std::vector<double> xs);

}  // namespace disc
