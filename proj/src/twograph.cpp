#include "switchscan/twograph.hpp"

#include <bit>
#include <cassert>

namespace switchscan {

TripleSet::TripleSet(int n) : n_(n), universe_(triple_count(n)) {
  if (n < 1 || n > kMaxDegree) throw DomainError("triple set order must be in 1..63");
  words_.assign((universe_ + 63) / 64, 0);
}

TripleSet TripleSet::complete(int n) { return TripleSet(n).complemented(); }

TripleSet TripleSet::from_ranks(int n, const std::vector<std::uint32_t>& ranks) {
  TripleSet t(n);
  for (auto r : ranks) {
    if (r >= t.universe_) throw DomainError("triple rank out of range");
    t.insert(r);
  }
  return t;
}

std::size_t TripleSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::uint32_t> TripleSet::ranks() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (auto m = words_[w]; m; m &= m - 1)
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(m))));
  return out;
}

TripleSet TripleSet::permuted(const Permutation& p) const {
  if (p.degree() != n_) throw DomainError("permutation degree does not match triple set");
  TripleSet out(n_);
  for (auto r : ranks()) out.insert(apply_to_triple(p, r));
  return out;
}

bool TripleSet::invariant_under(const Permutation& p) const {
  if (p.degree() != n_) return false;
  for (auto r : ranks())
    if (!contains(apply_to_triple(p, r))) return false;
  return true;
}

TripleSet TripleSet::complemented() const {
  TripleSet out = *this;
  for (auto& w : out.words_) w = ~w;
  if (const auto tail = universe_ % 64; tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

TripleSet symmetric_difference(const TripleSet& a, const TripleSet& b) {
  if (a.n_ != b.n_) throw DomainError("symmetric difference of triple sets on different point counts");
  TripleSet out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] ^= b.words_[i];
  return out;
}

TwoGraph::TwoGraph(TripleSet triples) : triples_(std::move(triples)) {
  if (!is_two_graph(triples_)) throw DomainError("triple set violates the two-graph axiom");
}

TwoGraph two_graph_of(const Graph& g) {
  const int n = g.n();
  TripleSet t(n);
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        const int edges = int(g.adjacent(a, b)) + int(g.adjacent(a, c)) + int(g.adjacent(b, c));
        if (edges % 2 == 1) t.insert(rank_triple(a, b, c));
      }
  return TwoGraph(std::move(t));
}

namespace {

bool four_set_even(const TripleSet& t, int a, int b, int c, int d) {
  const int k = int(t.contains(a, b, c)) + int(t.contains(a, b, d)) + int(t.contains(a, c, d)) +
                int(t.contains(b, c, d));
  return k % 2 == 0;
}

}  // namespace

bool is_two_graph(const TripleSet& t, bool transitive_invariant) {
  const int n = t.n();
  const int first_d = transitive_invariant ? n - 1 : 3;
  for (int d = first_d; d < n; ++d)
    for (int c = 2; c < d; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a)
          if (!four_set_even(t, a, b, c, d)) return false;
  return true;
}

TwoGraph tg_complement(const TwoGraph& t) {
  TripleSet c = t.triples().complemented();
  // The complement of a two-graph is again one; failure here is a bug.
  assert(is_two_graph(c));
  return TwoGraph(std::move(c));
}

TripleSet from_orbit_union(const TripleOrbits& orbits, const std::vector<std::size_t>& selected) {
  TripleSet t(orbits.n);
  for (auto idx : selected) {
    if (idx >= orbits.size()) throw DomainError("orbit index out of range");
    for (auto r : orbits.orbits[idx]) t.insert(r);
  }
  return t;
}

std::vector<int> triple_orbit_profile(Mask four_subset, const TripleOrbits& orbits) {
  if (popcount(four_subset) != 4) throw DomainError("orbit profile needs a 4-subset");
  const auto pts = mask_to_points(four_subset);
  std::vector<int> profile(orbits.size(), 0);
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> tri;
    for (int i = 0; i < 4; ++i)
      if (i != skip) tri.push_back(pts[static_cast<std::size_t>(i)]);
    ++profile[orbits.orbit_of[rank_triple(tri[0], tri[1], tri[2])]];
  }
  return profile;
}

Graph isolated_vertex_representative(const TripleSet& t) {
  const int n = t.n();
  Graph g(n);
  const int last = n - 1;
  for (int y = 1; y < last; ++y)
    for (int x = 0; x < y; ++x)
      if (t.contains(x, y, last)) g.add_edge(x, y);
  return g;
}

}  // namespace switchscan
