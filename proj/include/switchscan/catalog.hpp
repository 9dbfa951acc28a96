#pragma once

// Named permutation groups and two-graphs.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "switchscan/graph.hpp"
#include "switchscan/perm.hpp"
#include "switchscan/twograph.hpp"

namespace switchscan {

struct CatalogGroupInfo {
  std::string name;
  int degree;
  std::string description;
};

/// Every name accepted by catalog_group, in listing order.
const std::vector<CatalogGroupInfo>& catalog_groups();

/// Names from catalog_groups(), plus the families sym_<n>, pairs_<m> (Sym(m)
/// on 2-subsets) and grid_<m>. Throws DomainError for unknown names.
PermGroup catalog_group(std::string_view name);

/// Sym(m) (or Alt(m)) acting on the 2-subsets of {0..m-1} in colex order.
PermGroup group_on_pairs(int m, bool alternating = false);
/// Sym(m) wr Sym(2) on the m x m grid, point (r, c) = r*m + c.
PermGroup grid_group(int m);

/// Joins x, y in GF(q) when x - y is a nonzero square; q = 1 mod 4.
Graph paley_graph(int q);
/// Two-graph of the Paley graph with one extra isolated point q (infinity).
TwoGraph paley_two_graph(int q);
TwoGraph symplectic_two_graph_16();
/// Points are 2-subsets of an m-set: the two-graph of the graph joining
/// intersecting pairs, i.e. the stars, triangles and "edge plus path" triples.
/// The two-graph of the Kneser graph (disjoint pairs) is its complement.
TwoGraph kneser_two_graph(int m);
/// Two-graph of the m x m rook's graph: triples with three or exactly one
/// collinear pair. The complement of the rook's graph gives its complement.
TwoGraph grid_two_graph(int m);

/// The two two-graphs on pairs of a 5-set made of one A5-orbit of
/// path-shaped triples plus the star-shaped triples.
std::pair<TwoGraph, TwoGraph> a5_two_graphs();

/// Point of the projective line over GF(9) assigned to each colex pair index
/// so that the symmetric difference of a5_two_graphs() is paley_two_graph(9)
/// exactly.
const std::array<int, 10>& a5_paley_labelling();

struct CatalogTwoGraphInfo {
  std::string name;
  int degree;
  std::string description;
};

const std::vector<CatalogTwoGraphInfo>& catalog_two_graphs();
TwoGraph catalog_two_graph(std::string_view name);

}  // namespace switchscan
