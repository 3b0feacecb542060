#include "disc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace disc {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(Errc::BadInput, "line " + std::to_string(line) + ": " + what);
}

struct Line {
  int no;
  std::string tag;
  std::vector<long long> args;
};

// Splits into tagged lines, dropping blanks and # comments.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line l{no, {}, {}};
    if (!(ss >> l.tag)) continue;
    std::string tok;
    while (ss >> tok) {
      try {
        size_t used = 0;
        long long x = std::stoll(tok, &used);
        if (used != tok.size()) fail(no, "bad number '" + tok + "'");
        l.args.push_back(x);
      } catch (const std::logic_error&) {
        fail(no, "bad number '" + tok + "'");
      }
    }
    out.push_back(std::move(l));
  }
  return out;
}

void want_args(const Line& l, size_t k) {
  if (l.args.size() != k)
    fail(l.no, "'" + l.tag + "' expects " + std::to_string(k) + " numbers");
}

int vertex(const Line& l, long long x, int n) {
  if (x < 0 || x >= n) fail(l.no, "vertex " + std::to_string(x) + " out of range");
  return static_cast<int>(x);
}

// Graph lines; returns -1 if there is no `n` line yet.
Digraph graph_from_lines(const std::vector<Line>& lines, std::vector<const Line*>* rest) {
  int n = -1;
  std::vector<std::pair<int, Edge>> edges;
  for (const auto& l : lines) {
    if (l.tag == "n") {
      want_args(l, 1);
      if (n >= 0) fail(l.no, "duplicate 'n' line");
      if (l.args[0] < 0 || l.args[0] > 10'000'000) fail(l.no, "bad vertex count");
      n = static_cast<int>(l.args[0]);
    } else if (l.tag == "e") {
      want_args(l, 2);
      if (n < 0) fail(l.no, "edge before 'n' line");
      edges.push_back({l.no, {vertex(l, l.args[0], n), vertex(l, l.args[1], n)}});
    } else if (rest) {
      rest->push_back(&l);
    } else {
      fail(l.no, "unknown line tag '" + l.tag + "'");
    }
  }
  if (n < 0) throw Error(Errc::BadInput, "missing 'n' line");
  Digraph d(n);
  for (auto& [no, e] : edges) {
    if (e.first == e.second) fail(no, "self loop");
    d.add_edge(e.first, e.second);
  }
  return d;
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::BadInput, "cannot open " + path);
  return f;
}

}  // namespace

Digraph read_graph(std::istream& in) { return graph_from_lines(tokenize(in), nullptr); }

Instance read_instance(std::istream& in) {
  auto lines = tokenize(in);
  std::vector<const Line*> rest;
  Instance inst;
  inst.digraph = graph_from_lines(lines, &rest);
  int n = inst.digraph.vertex_count();
  std::vector<std::pair<AgentLabel, int>> agents;
  std::vector<int> used(n, 0);
  bool any_hole = false;
  for (const Line* l : rest) {
    if (l->tag == "p" || l->tag == "h") {
      want_args(*l, 2);
      int v = vertex(*l, l->args[1], n);
      if (used[v]) fail(l->no, "vertex " + std::to_string(v) + " already holds an agent");
      used[v] = l->no;
      int id = static_cast<int>(l->args[0]);
      if (l->tag == "p") agents.emplace_back(AgentLabel::pebble(id), v);
      else {
        agents.emplace_back(AgentLabel::hole(id), v);
        any_hole = true;
      }
    } else if (l->tag == "t") {
      want_args(*l, 2);
      int v = vertex(*l, l->args[1], n);
      if (!inst.targets.emplace(static_cast<int>(l->args[0]), v).second)
        fail(l->no, "second target for pebble " + std::to_string(l->args[0]));
    } else {
      fail(l->no, "unknown line tag '" + l->tag + "'");
    }
  }
  if (!any_hole) {
    std::vector<std::pair<int, int>> peb;
    for (auto& [lab, v] : agents) peb.emplace_back(lab.id, v);
    inst.start = Configuration::from_pebbles(n, peb);
  } else {
    if (static_cast<int>(agents.size()) != n)
      throw Error(Errc::BadInput, "with explicit holes every vertex needs an agent");
    inst.start = Configuration(n, agents);
  }
  validate_instance(inst);
  return inst;
}

Plan read_plan(std::istream& in) {
  Plan f;
  for (const auto& l : tokenize(in)) {
    if (l.tag != "m") fail(l.no, "expected 'm <from> <to>'");
    want_args(l, 2);
    if (l.args[0] < 0 || l.args[1] < 0) fail(l.no, "negative vertex");
    f.push_back({static_cast<int>(l.args[0]), static_cast<int>(l.args[1])});
  }
  return f;
}

void write_graph(std::ostream& out, const Digraph& d) {
  out << "n " << d.vertex_count() << "\n";
  for (auto [u, v] : d.edges()) out << "e " << u << " " << v << "\n";
}

void write_instance(std::ostream& out, const Instance& inst) {
  write_graph(out, inst.digraph);
  const auto& c = inst.start;
  for (int v = 0; v < c.vertex_count(); ++v)
    out << (c.is_hole(v) ? "h " : "p ") << c.at(v).id << " " << v << "\n";
  for (auto& [p, v] : inst.targets) out << "t " << p << " " << v << "\n";
}

void write_plan(std::ostream& out, const Plan& f) {
  for (auto m : f) out << "m " << m.from << " " << m.to << "\n";
  out << "# moves=" << f.size() << "\n";
}

std::string graph_to_json(const Digraph& d) {
  nlohmann::json j;
  j["n"] = d.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : d.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

Digraph graph_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    if (n < 0) throw Error(Errc::BadInput, "bad vertex count");
    Digraph d(n);
    for (const auto& e : j.at("edges")) {
      int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw Error(Errc::BadInput, "edge out of range");
      d.add_edge(u, v);
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadInput, std::string("json: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  auto f = open(path);
  return read_instance(f);
}

Plan load_plan(const std::string& path) {
  auto f = open(path);
  return read_plan(f);
}

Digraph load_graph(const std::string& path) {
  auto f = open(path);
  return read_graph(f);
}

}  // namespace disc
