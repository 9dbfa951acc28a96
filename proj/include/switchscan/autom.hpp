#pragma once

// Automorphism groups and isomorphisms of graphs and 3-uniform hypergraphs.
//
// Search is individualization-refinement: colourings are refined by a
// label-invariant signature until stable, the first smallest non-singleton cell
// is split by individualizing one vertex, and leaves (discrete colourings) are
// compared. Generators are found level by level from the deepest base point up,
// with orbit pruning from the generators already known.

#include <optional>

#include "switchscan/graph.hpp"
#include "switchscan/perm.hpp"
#include "switchscan/twograph.hpp"

namespace switchscan {

PermGroup graph_aut(const Graph& g);
PermGroup hypergraph_aut(const TripleSet& t);
inline PermGroup hypergraph_aut(const TwoGraph& t) { return hypergraph_aut(t.triples()); }

/// Stops at the first non-identity automorphism; builds no group.
std::optional<Permutation> find_nontrivial_automorphism(const Graph& g);
inline bool has_trivial_aut(const Graph& g) { return !find_nontrivial_automorphism(g).has_value(); }

/// True iff G is all of Aut(t). t must be G-invariant (DomainError otherwise).
bool is_full_group(const TripleSet& t, const PermGroup& g);

/// p with a.permuted(p) == b, if one exists.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);
std::optional<Permutation> find_isomorphism(const TripleSet& a, const TripleSet& b);

bool is_automorphism(const TripleSet& t, const Permutation& p);

}  // namespace switchscan
