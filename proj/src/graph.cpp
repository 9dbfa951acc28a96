#include "switchscan/graph.hpp"

#include <algorithm>

namespace switchscan {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxDegree) throw DomainError("graph order must be in 1..63");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) { return complement(Graph(n)); }

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (Mask m = row(u) & ~low_mask(u + 1); m; m &= m - 1) out.emplace_back(u, std::countr_zero(m));
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw DomainError("edge endpoints out of range or equal");
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("edge endpoints out of range");
  rows_[static_cast<std::size_t>(u)] &= ~bit(v);
  rows_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph Graph::permuted(const Permutation& p) const {
  if (p.degree() != n_) throw DomainError("permutation degree does not match graph");
  Graph out(n_);
  for (int v = 0; v < n_; ++v) out.rows_[static_cast<std::size_t>(p(v))] = p.apply(row(v));
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

Graph switch_set(const Graph& g, Mask x) {
  const Mask all = low_mask(g.n());
  x &= all;
  Graph out = g;
  for (int v = 0; v < g.n(); ++v) out.rows_[static_cast<std::size_t>(v)] ^= (x & bit(v)) ? (all & ~x) : x;
  return out;
}

bool switch_compose_law_check(const Graph& g, Mask x, Mask y) {
  return switch_set(switch_set(g, x), y) == switch_set(g, x ^ y);
}

Graph complement(const Graph& g) {
  const int n = g.n();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph even_valency_representative(const Graph& g) {
  if (g.n() % 2 == 0) throw DomainError("even-valency representative needs an odd number of vertices");
  Mask odd = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2 == 1) odd |= bit(v);
  return switch_set(g, odd);
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (p.apply(g.row(v)) != g.row(p(v))) return false;
  return true;
}

SwitchingClassCursor::SwitchingClassCursor(const Graph& start, std::uint64_t begin, std::uint64_t end)
    : index_(begin), end_(std::min(end, class_size(start.n()))), current_(switch_set(start, gray_set(begin))) {}

SwitchingClassCursor::SwitchingClassCursor(const Graph& start)
    : SwitchingClassCursor(start, 0, class_size(start.n())) {}

void SwitchingClassCursor::advance() {
  ++index_;
  if (index_ < end_) current_.switch_vertex(std::countr_zero(index_));
}

std::vector<Graph> switching_class(const Graph& g) {
  std::vector<Graph> out;
  out.reserve(class_size(g.n()));
  for (SwitchingClassCursor c(g); !c.done(); c.advance()) out.push_back(c.graph());
  return out;
}

}  // namespace switchscan
