#pragma once

#include <cstdint>
#include <vector>

#include "switchscan/graph.hpp"
#include "switchscan/perm.hpp"

namespace switchscan {

/// Raw 3-uniform hypergraph on {0..n-1}: a bitset over colex triple ranks.
class TripleSet {
 public:
  TripleSet() = default;
  explicit TripleSet(int n);
  static TripleSet complete(int n);
  static TripleSet from_ranks(int n, const std::vector<std::uint32_t>& ranks);

  int n() const { return n_; }
  std::uint32_t universe() const { return universe_; }
  bool contains(std::uint32_t rank) const { return (words_[rank >> 6] >> (rank & 63)) & 1U; }
  bool contains(int a, int b, int c) const { return contains(rank_triple(a, b, c)); }
  void insert(std::uint32_t rank) { words_[rank >> 6] |= std::uint64_t{1} << (rank & 63); }
  void erase(std::uint32_t rank) { words_[rank >> 6] &= ~(std::uint64_t{1} << (rank & 63)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::uint32_t> ranks() const;

  TripleSet permuted(const Permutation& p) const;
  bool invariant_under(const Permutation& p) const;
  TripleSet complemented() const;

  friend bool operator==(const TripleSet&, const TripleSet&) = default;
  friend TripleSet symmetric_difference(const TripleSet& a, const TripleSet& b);

 private:
  int n_ = 0;
  std::uint32_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A triple set in which every 4-subset holds an even number of triples.
class TwoGraph {
 public:
  TwoGraph() = default;
  /// Throws DomainError when the axiom fails.
  explicit TwoGraph(TripleSet triples);

  int n() const { return triples_.n(); }
  const TripleSet& triples() const { return triples_; }
  bool contains(int a, int b, int c) const { return triples_.contains(a, b, c); }
  std::size_t count() const { return triples_.count(); }

  friend bool operator==(const TwoGraph&, const TwoGraph&) = default;

 private:
  TripleSet triples_;
};

/// Triples carrying an odd number of edges of g.
TwoGraph two_graph_of(const Graph& g);

/// With `transitive_invariant` only 4-subsets through the last point are
/// checked; callers must already know the set is invariant under a
/// transitive group.
bool is_two_graph(const TripleSet& t, bool transitive_invariant = false);

TwoGraph tg_complement(const TwoGraph& t);

/// Plain XOR; the result need not satisfy the two-graph axiom.
TripleSet symmetric_difference(const TripleSet& a, const TripleSet& b);

TripleSet from_orbit_union(const TripleOrbits& orbits, const std::vector<std::size_t>& selected);

/// For a 4-subset x, how many of its four 3-subsets fall in each orbit.
std::vector<int> triple_orbit_profile(Mask four_subset, const TripleOrbits& orbits);

/// Class member with the last point isolated: x ~ y iff {x, y, n-1} is a triple.
Graph isolated_vertex_representative(const TripleSet& t);
inline Graph isolated_vertex_representative(const TwoGraph& t) { return isolated_vertex_representative(t.triples()); }

}  // namespace switchscan
