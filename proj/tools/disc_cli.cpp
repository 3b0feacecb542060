// disc: command line front end. Exit codes are a contract:
//   0 solved / feasible / valid, 1 usage or parse error,
//   2 infeasible (or plan rejected by verify), 3 unsupported,
//   4 oracle disagreement (only with --oracle).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "disc/io.hpp"
#include "disc/lab.hpp"
#include "disc/solver.hpp"
#include "disc/tree.hpp"

namespace {

using namespace disc;

constexpr int kOk = 0, kUsage = 1, kInfeasible = 2, kUnsupported = 3, kOracle = 4;

// "40", "20,40,60", "20..100" (step 1), "20..100:5" or "20..100..5".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoi(part));
      continue;
    }
    int lo = std::stoi(part.substr(0, dots));
    std::string rest = part.substr(dots + 2);
    int step = 1;
    auto sep = rest.find_first_of(":");
    if (sep == std::string::npos) sep = rest.find("..");
    if (sep != std::string::npos) {
      step = std::stoi(rest.substr(sep + (rest[sep] == ':' ? 1 : 2)));
      rest = rest.substr(0, sep);
    }
    int hi = std::stoi(rest);
    if (step <= 0 || hi < lo) throw std::invalid_argument("bad range '" + part + "'");
    for (int x = lo; x <= hi; x += step) out.push_back(x);
  }
  if (out.empty()) throw std::invalid_argument("empty range");
  return out;
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw Error(Errc::BadInput, "cannot write " + path);
    os = &file;
  }
};

int exit_for(SolveOutcome::Kind k) {
  switch (k) {
    case SolveOutcome::Kind::Feasible: return kOk;
    case SolveOutcome::Kind::Infeasible: return kInfeasible;
    default: return kUnsupported;
  }
}

// Returns kOracle on disagreement, kOk otherwise (including "too big").
int oracle_check(const Instance& inst, bool feasible) {
  try {
    auto o = oracle_solve(inst);
    if (o.feasible() != feasible) {
      std::cerr << "oracle disagrees: oracle says " << outcome_name(o.kind) << "\n";
      return kOracle;
    }
    std::cerr << "oracle agrees\n";
  } catch (const Error& e) {
    if (e.code() != Errc::StateSpaceTooLarge) throw;
    std::cerr << "oracle skipped: state space too large\n";
  }
  return kOk;
}

int cmd_solve(const std::string& path, const std::string& out, bool do_compress, bool dump,
              bool stats, bool oracle) {
  Instance inst = load_instance(path);
  if (dump) std::cerr << dump_tree(build_bct(underlying_graph(inst.digraph)));
  SolveOutcome res = solve(inst);
  if (res.feasible() && do_compress) res.plan = compress(res.plan, inst);
  if (stats)
    std::cerr << "outcome " << outcome_name(res.kind) << " moves " << res.plan.size() << " ms "
              << res.stats.ms << "\n";
  if (oracle && res.kind != SolveOutcome::Kind::Unsupported) {
    int rc = oracle_check(inst, res.feasible());
    if (rc != kOk) return rc;
  }
  if (!res.feasible()) {
    std::cerr << outcome_name(res.kind) << (res.reason.empty() ? "" : ": " + res.reason) << "\n";
    return exit_for(res.kind);
  }
  Output o(out);
  write_plan(*o.os, res.plan);
  return kOk;
}

int cmd_check(const std::string& path, bool oracle) {
  Instance inst = load_instance(path);
  bool ok = check_feasibility(inst);
  std::cout << (ok ? "feasible" : "infeasible") << "\n";
  if (oracle) {
    int rc = oracle_check(inst, ok);
    if (rc != kOk) return rc;
  }
  return ok ? kOk : kInfeasible;
}

int cmd_verify(const std::string& inst_path, const std::string& plan_path) {
  Instance inst = load_instance(inst_path);
  Plan f = load_plan(plan_path);
  std::string why;
  if (verify(inst, f, &why)) {
    std::cout << "valid " << f.size() << " moves\n";
    return kOk;
  }
  std::cout << "invalid: " << why << "\n";
  return kInfeasible;
}

int cmd_generate(int nodes, int agents, std::uint64_t seed, int ws_k, double ws_p,
                 bool graph_only, bool json, const std::string& out) {
  GenParams gp;
  gp.node_count = nodes;
  gp.seed = seed;
  gp.ws_k = ws_k;
  gp.ws_p = ws_p;
  Digraph d = gen_digraph(gp);
  Output o(out);
  if (json) {
    *o.os << graph_to_json(d) << "\n";
  } else if (graph_only) {
    write_graph(*o.os, d);
  } else {
    *o.os << "# generated nodes=" << nodes << " agents=" << agents << " seed=" << seed << "\n";
    write_instance(*o.os, gen_instance(d, agents, seed));
  }
  return kOk;
}

std::string summary_path(const std::string& raw) {
  auto dot = raw.rfind(".csv");
  if (dot != std::string::npos && dot + 4 == raw.size()) return raw.substr(0, dot) + "_summary.csv";
  return raw + "_summary.csv";
}

// One cell at a time so an interrupted sweep leaves complete rows behind.
int cmd_bench(const std::vector<int>& nodes, const std::vector<int>& agents, int reps,
              std::uint64_t seed, int threads, const std::string& out) {
  std::ofstream raw(out), sum(summary_path(out));
  if (!raw || !sum) throw Error(Errc::BadInput, "cannot write " + out);
  raw << "nodes,agents,seed,moves,ms,feasible\n";
  sum << "nodes,agents,median_moves,median_ms\n";
  long long failed = 0;
  for (int n : nodes)
    for (int a : agents) {
      BenchSweep sw;
      sw.nodes = {n};
      sw.agents = {a};
      sw.reps = reps;
      sw.seed = seed;
      sw.threads = threads;
      auto recs = run_bench(sw);
      for (const auto& r : recs) {
        if (r.failed) {
          ++failed;
          continue;
        }
        raw << r.nodes << "," << r.agents << "," << r.seed << "," << r.moves << "," << r.ms << ","
            << (r.feasible ? 1 : 0) << "\n";
      }
      for (const auto& s : summarize(recs))
        sum << s.nodes << "," << s.agents << "," << s.median_moves << "," << s.median_ms << "\n";
      raw.flush();
      sum.flush();
      std::cerr << "cell nodes=" << n << " agents=" << a << " done\n";
    }
  if (failed) std::cerr << failed << " runs failed and were left out\n";
  std::cout << "wrote " << out << " and " << summary_path(out) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disc: pebble motion on strongly connected digraphs"};
  app.require_subcommand(1, 1);

  std::string inst_path, plan_path, out;
  bool do_compress = false, dump = false, stats = false, oracle = false;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance, print the plan");
  solve_cmd->add_option("instance", inst_path, "instance file")->required();
  solve_cmd->add_option("--out", out, "plan file (default stdout)");
  solve_cmd->add_flag("--compress", do_compress, "cancel redundant moves");
  solve_cmd->add_flag("--dump-tree", dump, "print the block tree to stderr");
  solve_cmd->add_flag("--stats", stats, "print move count and time to stderr");
  solve_cmd->add_flag("--oracle", oracle, "cross-check with brute force when small");

  auto* check_cmd = app.add_subcommand("check", "decide feasibility");
  check_cmd->add_option("instance", inst_path, "instance file")->required();
  check_cmd->add_flag("--oracle", oracle, "cross-check with brute force when small");

  auto* verify_cmd = app.add_subcommand("verify", "check a plan against an instance");
  verify_cmd->add_option("instance", inst_path, "instance file")->required();
  verify_cmd->add_option("plan", plan_path, "plan file")->required();

  int nodes = 20, agents = 10, ws_k = 4;
  double ws_p = 0.3;
  std::uint64_t seed = 1;
  bool graph_only = false, json = false;
  auto* gen_cmd = app.add_subcommand("generate", "random instance from the benchmark generator");
  gen_cmd->add_option("--nodes", nodes, "vertex count of the small-world graph")
      ->check(CLI::Range(3, 1000000));
  gen_cmd->add_option("--agents", agents, "pebble count")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--ws-k", ws_k, "ring neighbours");
  gen_cmd->add_option("--ws-p", ws_p, "rewiring probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_flag("--graph-only", graph_only, "emit only the digraph");
  gen_cmd->add_flag("--json", json, "emit the digraph as JSON");
  gen_cmd->add_option("--out", out, "output file (default stdout)");

  std::string node_range = "20..100:5", agent_range = "10";
  int reps = 200, threads = 0;
  std::string bench_out = "bench.csv";
  auto* bench_cmd = app.add_subcommand("bench", "benchmark sweep, writes raw and summary CSV");
  bench_cmd->add_option("--nodes", node_range, "e.g. 40, 20,40 or 20..100:5");
  bench_cmd->add_option("--agents", agent_range, "e.g. 10 or 1..14");
  bench_cmd->add_option("--reps", reps, "graphs per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_option("--threads", threads, "worker threads, 0 = all cores");
  bench_cmd->add_option("--out", bench_out, "raw CSV path; summary goes next to it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(inst_path, out, do_compress, dump, stats, oracle);
    if (*check_cmd) return cmd_check(inst_path, oracle);
    if (*verify_cmd) return cmd_verify(inst_path, plan_path);
    if (*gen_cmd) return cmd_generate(nodes, agents, seed, ws_k, ws_p, graph_only, json, out);
    if (*bench_cmd)
      return cmd_bench(parse_range(node_range), parse_range(agent_range), reps, seed, threads,
                       bench_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
