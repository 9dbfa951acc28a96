#pragma once

// Plain-text formats. Points are 1-based in files and 0-based in memory.
//
//   group:      n, then one generator per line as n images
//   graph:      n, then "u v" per edge (u < v), sorted
//   two-graph:  n, then "a b c" per triple (a < b < c), sorted
//
// Blank lines and lines starting with '#' are ignored. Writers emit exactly
// the canonical form, so write(read(write(x))) == write(x).

#include <iosfwd>
#include <string>

#include "switchscan/graph.hpp"
#include "switchscan/perm.hpp"
#include "switchscan/twograph.hpp"

namespace switchscan {

PermGroup read_group(std::istream& in);
void write_group(std::ostream& out, const PermGroup& g);

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

TripleSet read_triples(std::istream& in);
/// As read_triples, then checks the two-graph axiom (DomainError on failure).
TwoGraph read_two_graph(std::istream& in);
void write_two_graph(std::ostream& out, const TripleSet& t);
inline void write_two_graph(std::ostream& out, const TwoGraph& t) { write_two_graph(out, t.triples()); }

PermGroup load_group(const std::string& path);
Graph load_graph(const std::string& path);
TwoGraph load_two_graph(const std::string& path);

}  // namespace switchscan
