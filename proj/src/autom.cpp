#include "switchscan/autom.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace switchscan {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Ordered colouring: cells[i] is the vertex set of colour i.
struct Coloring {
  std::vector<std::uint8_t> color;
  std::vector<Mask> cells;
  std::uint64_t trace = 0;

  bool discrete() const { return cells.size() == color.size(); }

  void recolor() {
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (Mask m = cells[i]; m; m &= m - 1) color[static_cast<std::size_t>(std::countr_zero(m))] = static_cast<std::uint8_t>(i);
  }
};

Coloring unit_coloring(int n) {
  Coloring c;
  c.color.assign(static_cast<std::size_t>(n), 0);
  c.cells.push_back(low_mask(n));
  return c;
}

Coloring individualize(const Coloring& c, int v) {
  const std::size_t cv = c.color[static_cast<std::size_t>(v)];
  Coloring out;
  out.color = c.color;
  out.cells.reserve(c.cells.size() + 1);
  out.cells.insert(out.cells.end(), c.cells.begin(), c.cells.begin() + static_cast<std::ptrdiff_t>(cv));
  out.cells.push_back(bit(v));
  out.cells.push_back(c.cells[cv] & ~bit(v));
  out.cells.insert(out.cells.end(), c.cells.begin() + static_cast<std::ptrdiff_t>(cv) + 1, c.cells.end());
  out.recolor();
  out.trace = mix(c.trace, cv + 1);
  return out;
}

bool same_shape(const Coloring& a, const Coloring& b) {
  if (a.trace != b.trace || a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    if (popcount(a.cells[i]) != popcount(b.cells[i])) return false;
  return true;
}

// First smallest cell of size >= 2.
std::size_t target_cell(const Coloring& c) {
  std::size_t best = c.cells.size();
  int best_size = 1 << 30;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const int s = popcount(c.cells[i]);
    if (s >= 2 && s < best_size) {
      best = i;
      best_size = s;
    }
  }
  return best;
}

Mask map_mask(Mask m, const std::vector<int>& f) {
  Mask out = 0;
  for (; m; m &= m - 1) out |= bit(f[static_cast<std::size_t>(std::countr_zero(m))]);
  return out;
}

struct GraphView {
  const Graph& g;
  int n() const { return g.n(); }

  std::uint64_t key(int v, const Coloring& c) const {
    std::uint64_t h = 0;
    const Mask r = g.row(v);
    for (Mask cell : c.cells) h = mix(h, static_cast<std::uint64_t>(popcount(r & cell)));
    return h;
  }

  // f maps `domain` (left vertices) into the right structure.
  bool consistent(const std::vector<int>& f, Mask domain, const GraphView& right) const {
    const Mask image = map_mask(domain, f);
    for (Mask m = domain; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (map_mask(g.row(u) & domain, f) != (right.g.row(f[static_cast<std::size_t>(u)]) & image)) return false;
    }
    return true;
  }
};

struct HyperView {
  int order = 0;
  std::vector<Mask> link;  // link[v*n + a] = { b : {v,a,b} is a triple }

  explicit HyperView(const TripleSet& t) : order(t.n()) {
    link.assign(static_cast<std::size_t>(order * order), 0);
    for (auto r : t.ranks()) {
      const auto [a, b, c] = unrank_triple(r);
      at(a, b) |= bit(c);
      at(b, a) |= bit(c);
      at(a, c) |= bit(b);
      at(c, a) |= bit(b);
      at(b, c) |= bit(a);
      at(c, b) |= bit(a);
    }
  }

  Mask& at(int v, int a) { return link[static_cast<std::size_t>(v * order + a)]; }
  Mask at(int v, int a) const { return link[static_cast<std::size_t>(v * order + a)]; }
  int n() const { return order; }

  std::uint64_t key(int v, const Coloring& c) const {
    std::vector<std::uint64_t> sub;
    sub.reserve(static_cast<std::size_t>(order));
    for (int a = 0; a < order; ++a) {
      if (a == v) continue;
      std::uint64_t h = c.color[static_cast<std::size_t>(a)] + 1U;
      const Mask l = at(v, a);
      for (Mask cell : c.cells) h = mix(h, static_cast<std::uint64_t>(popcount(l & cell)));
      sub.push_back(h);
    }
    std::sort(sub.begin(), sub.end());
    std::uint64_t h = 0;
    for (auto s : sub) h = mix(h, s);
    return h;
  }

  bool consistent(const std::vector<int>& f, Mask domain, const HyperView& right) const {
    const Mask image = map_mask(domain, f);
    for (Mask m = domain; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      for (Mask rest = m & (m - 1); rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        const Mask lhs = map_mask(at(u, w) & domain, f);
        const Mask rhs = right.at(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(w)]) & image;
        if (lhs != rhs) return false;
      }
    }
    return true;
  }
};

template <class S>
void refine(const S& s, Coloring& c) {
  const int n = s.n();
  std::vector<std::tuple<std::uint8_t, std::uint64_t, int>> items(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) items[static_cast<std::size_t>(v)] = {c.color[static_cast<std::size_t>(v)], s.key(v, c), v};
    std::sort(items.begin(), items.end());
    std::vector<Mask> cells;
    std::uint64_t round = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const bool fresh = i == 0 || std::get<0>(items[i]) != std::get<0>(items[i - 1]) ||
                         std::get<1>(items[i]) != std::get<1>(items[i - 1]);
      if (fresh) {
        cells.push_back(0);
        round = mix(round, std::get<1>(items[i]));
      }
      cells.back() |= bit(std::get<2>(items[i]));
    }
    for (Mask cell : cells) round = mix(round, static_cast<std::uint64_t>(popcount(cell)));
    c.trace = mix(c.trace, round);
    const bool stable = cells.size() == c.cells.size();
    c.cells = std::move(cells);
    c.recolor();
    if (stable) return;
  }
}

template <class S>
class Searcher {
 public:
  struct Node {
    Coloring coloring;
    std::size_t target = 0;  // cell split at this depth (unused at the leaf)
    int chosen = -1;
  };

  Searcher(const S& left, const S& right) : left_(left), right_(right), n_(left.n()) {
    Coloring c = unit_coloring(n_);
    refine(left_, c);
    while (!c.discrete()) {
      Node node{c, target_cell(c), -1};
      node.chosen = std::countr_zero(c.cells[node.target]);
      Coloring next = individualize(c, node.chosen);
      refine(left_, next);
      path_.push_back(std::move(node));
      c = std::move(next);
    }
    path_.push_back(Node{std::move(c), 0, -1});
  }

  const std::vector<Node>& path() const { return path_; }

  // Right-side colouring compatible with path_[d]; searches below it.
  std::optional<Permutation> dfs(std::size_t d, const Coloring& r) const {
    const Coloring& l = path_[d].coloring;
    std::vector<int> f(static_cast<std::size_t>(n_), -1);
    Mask domain = 0;
    for (std::size_t i = 0; i < l.cells.size(); ++i) {
      if (popcount(l.cells[i]) != 1) continue;
      const int u = std::countr_zero(l.cells[i]);
      f[static_cast<std::size_t>(u)] = std::countr_zero(r.cells[i]);
      domain |= bit(u);
    }
    if (!left_.consistent(f, domain, right_)) return std::nullopt;
    if (l.discrete()) return Permutation::from_images(f);
    for (Mask m = r.cells[path_[d].target]; m; m &= m - 1)
      if (auto found = branch(d, std::countr_zero(m), r)) return found;
    return std::nullopt;
  }

  // Individualize u in the right colouring at depth d and search below.
  std::optional<Permutation> branch(std::size_t d, int u, const Coloring& r) const {
    Coloring next = individualize(r, u);
    refine(right_, next);
    if (!same_shape(next, path_[d + 1].coloring)) return std::nullopt;
    return dfs(d + 1, next);
  }

  std::optional<Permutation> match_from_root() const {
    Coloring r = unit_coloring(n_);
    refine(right_, r);
    if (!same_shape(r, path_[0].coloring)) return std::nullopt;
    return dfs(0, r);
  }

 private:
  const S& left_;
  const S& right_;
  int n_;
  std::vector<Node> path_;
};

struct OrbitUnion {
  std::vector<int> parent;
  explicit OrbitUnion(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void absorb(const Permutation& g) {
    for (int i = 0; i < g.degree(); ++i) {
      const int a = find(i), b = find(g(i));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
};

template <class S>
PermGroup automorphisms(const S& s) {
  const int n = s.n();
  Searcher<S> search(s, s);
  const auto& path = search.path();
  std::vector<Permutation> gens;
  OrbitUnion orbits(n);
  BigInt order = 1;
  for (std::size_t i = path.size() - 1; i-- > 0;) {
    const auto& node = path[i];
    const int v = node.chosen;
    std::vector<int> failed;
    for (Mask m = node.coloring.cells[node.target]; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (orbits.find(w) == orbits.find(v)) continue;
      const bool known_bad = std::any_of(failed.begin(), failed.end(), [&](int x) { return orbits.find(x) == orbits.find(w); });
      if (known_bad) continue;
      if (auto g = search.branch(i, w, node.coloring)) {
        gens.push_back(*g);
        orbits.absorb(*g);
      } else {
        failed.push_back(w);
      }
    }
    int size = 0;
    for (int x = 0; x < n; ++x)
      if (orbits.find(x) == orbits.find(v)) ++size;
    order *= size;
  }
  PermGroup group(n, std::move(gens));
  if (group.order() != order) throw std::logic_error("automorphism search: orbit product disagrees with group order");
  return group;
}

template <class S>
std::optional<Permutation> first_nontrivial(const S& s) {
  Searcher<S> search(s, s);
  const auto& path = search.path();
  for (std::size_t i = path.size() - 1; i-- > 0;) {
    const auto& node = path[i];
    for (Mask m = node.coloring.cells[node.target] & ~bit(node.chosen); m; m &= m - 1)
      if (auto g = search.branch(i, std::countr_zero(m), node.coloring)) return g;
  }
  return std::nullopt;
}

}  // namespace

PermGroup graph_aut(const Graph& g) { return automorphisms(GraphView{g}); }

PermGroup hypergraph_aut(const TripleSet& t) { return automorphisms(HyperView(t)); }

std::optional<Permutation> find_nontrivial_automorphism(const Graph& g) { return first_nontrivial(GraphView{g}); }

bool is_full_group(const TripleSet& t, const PermGroup& g) {
  if (t.n() != g.degree()) throw DomainError("group and triple set have different degrees");
  for (const auto& gen : g.generators())
    if (!t.invariant_under(gen)) throw DomainError("triple set is not invariant under the group");
  return hypergraph_aut(t).order() == g.order();
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return std::nullopt;
  GraphView left{a}, right{b};
  return Searcher<GraphView>(left, right).match_from_root();
}

std::optional<Permutation> find_isomorphism(const TripleSet& a, const TripleSet& b) {
  if (a.n() != b.n() || a.count() != b.count()) return std::nullopt;
  HyperView left(a), right(b);
  return Searcher<HyperView>(left, right).match_from_root();
}

bool is_automorphism(const TripleSet& t, const Permutation& p) { return t.invariant_under(p); }

}  // namespace switchscan
