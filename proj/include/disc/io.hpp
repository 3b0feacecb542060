#pragma once

#include <iosfwd>
#include <string>

#include "disc/instance.hpp"

namespace disc {

// Parse errors carry the offending line number (1-based) in the message and
// use Errc::BadInput.
Digraph read_graph(std::istream& in);
Instance read_instance(std::istream& in);
Plan read_plan(std::istream& in);

void write_graph(std::ostream& out, const Digraph& d);
void write_instance(std::ostream& out, const Instance& inst);
// One `m <from> <to>` per line, then `# moves=<n>`.
void write_plan(std::ostream& out, const Plan& f);

// JSON form of the graph: {"n": N, "edges": [[u, v], ...]}.
std::string graph_to_json(const Digraph& d);
Digraph graph_from_json(const std::string& text);

Instance load_instance(const std::string& path);
Plan load_plan(const std::string& path);
Digraph load_graph(const std::string& path);

}  // namespace disc
