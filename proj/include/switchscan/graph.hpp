#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "switchscan/perm.hpp"
#include "switchscan/subsets.hpp"

namespace switchscan {

/// Simple undirected graph on vertices {0..n-1}, n <= 63; row v is the
/// neighbourhood bitset of v. Equality is labelled equality, never isomorphism.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);
  static Graph cycle(int n);

  int n() const { return n_; }
  Mask row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (row(u) >> v) & 1U; }
  int degree(int v) const { return popcount(row(v)); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Switches with respect to the single vertex v (flips every pair {v, u}).
  void switch_vertex(int v) {
    const Mask others = low_mask(n_) & ~bit(v);
    rows_[static_cast<std::size_t>(v)] ^= others;
    for (Mask m = others; m; m &= m - 1) rows_[static_cast<std::size_t>(std::countr_zero(m))] ^= bit(v);
  }

  /// The graph with edge {p(u), p(v)} for each edge {u, v}.
  Graph permuted(const Permutation& p) const;

  friend bool operator==(const Graph& a, const Graph& b);
  friend Graph switch_set(const Graph& g, Mask x);

 private:
  int n_ = 0;
  std::array<Mask, kMaxDegree> rows_{};
};

/// sigma_X: flips exactly the pairs with one endpoint in x.
Graph switch_set(const Graph& g, Mask x);

/// switch(switch(g, x), y) == switch(g, x ^ y).
bool switch_compose_law_check(const Graph& g, Mask x, Mask y);

Graph complement(const Graph& g);

/// The unique class member with all valencies even; n must be odd.
Graph even_valency_representative(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Subset of {0..n-2} visited at position `index` of the switching-class scan.
inline Mask gray_set(std::uint64_t index) { return index ^ (index >> 1); }

/// Walks class members over a contiguous Gray-code index range
/// [begin, end) of {0 .. 2^(n-1)}. Consecutive members differ by switching one
/// vertex; the first member costs one full switch.
class SwitchingClassCursor {
 public:
  SwitchingClassCursor(const Graph& start, std::uint64_t begin, std::uint64_t end);
  explicit SwitchingClassCursor(const Graph& start);

  bool done() const { return index_ >= end_; }
  std::uint64_t index() const { return index_; }
  Mask switching_set() const { return gray_set(index_); }
  const Graph& graph() const { return current_; }
  void advance();

 private:
  std::uint64_t index_;
  std::uint64_t end_;
  Graph current_;
};

inline std::uint64_t class_size(int n) { return std::uint64_t{1} << (n - 1); }

/// All 2^(n-1) members of g's class in scan order.
std::vector<Graph> switching_class(const Graph& g);

}  // namespace switchscan
