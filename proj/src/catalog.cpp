#include "switchscan/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>

#include "switchscan/autom.hpp"
#include "switchscan/field.hpp"

namespace switchscan {

namespace {

using Cycles = std::vector<std::vector<int>>;

// 1-based cycles as printed in the usual references.
Permutation from_cycles_1(int n, const Cycles& cycles) {
  Cycles zero = cycles;
  for (auto& c : zero)
    for (auto& x : c) --x;
  return Permutation::from_cycles(n, zero);
}

std::vector<SemilinearMap> with(std::vector<SemilinearMap> maps, std::initializer_list<SemilinearMap> extra) {
  maps.insert(maps.end(), extra);
  return maps;
}

PermGroup projective(int d, int q, bool gl, int frob) {
  const auto& f = SmallField::get(q);
  auto maps = sl_generators(d, f);
  if (gl) maps.push_back(diagonal_map(d, f, f.primitive_element()));
  if (frob > 0) {
    auto m = frobenius_map(d);
    m.frobenius_power = frob;
    maps.push_back(m);
  }
  return projective_group(d, f, maps);
}

PermGroup affine(int d, int q, bool gl, bool frob) {
  const auto& f = SmallField::get(q);
  auto maps = sl_generators(d, f);
  if (gl) maps.push_back(diagonal_map(d, f, f.primitive_element()));
  if (frob) maps.push_back(frobenius_map(d));
  return affine_group(d, f, maps);
}

// Binary 4x4 matrices acting on row vectors; coordinate i is bit i of a point.
using Mat4 = std::array<std::array<int, 4>, 4>;

int symplectic_form(int x, int y) {
  auto b = [](int v, int i) { return (v >> i) & 1; };
  return (b(x, 0) * b(y, 1) + b(x, 1) * b(y, 0) + b(x, 2) * b(y, 3) + b(x, 3) * b(y, 2)) % 2;
}

int elliptic_quadric(int x) {
  auto b = [](int v, int i) { return (v >> i) & 1; };
  return (b(x, 0) * b(x, 1) + b(x, 2) + b(x, 2) * b(x, 3) + b(x, 3)) % 2;
}

// x -> x + B(x, v) v
Mat4 transvection(int v) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = (int(i == j) + symplectic_form(1 << i, v) * ((v >> j) & 1)) % 2;
  return m;
}

Mat4 times(const Mat4& a, const Mat4& b) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      m[i][j] = s % 2;
    }
  return m;
}

SemilinearMap as_map(const Mat4& m) {
  SemilinearMap s;
  for (const auto& row : m) s.matrix.insert(s.matrix.end(), row.begin(), row.end());
  return s;
}

PermGroup affine_16(const std::vector<Mat4>& linear) {
  std::vector<SemilinearMap> maps;
  for (const auto& m : linear) maps.push_back(as_map(m));
  return affine_group(4, SmallField::get(2), maps);
}

PermGroup affine_sp4_2() {
  std::vector<Mat4> gens;
  for (int v = 1; v < 16; ++v) gens.push_back(transvection(v));
  return affine_16(gens);
}

PermGroup affine_a6_16() {
  std::vector<Mat4> gens;
  for (int v = 2; v < 16; ++v) gens.push_back(times(transvection(1), transvection(v)));
  return affine_16(gens);
}

// Orthogonal reflections in the nonsingular vectors of the elliptic quadric.
PermGroup so4minus_16() {
  std::vector<Mat4> gens;
  for (int v = 1; v < 16; ++v)
    if (elliptic_quadric(v) == 1) gens.push_back(transvection(v));
  return affine_16(gens);
}

// The 2-(11,5,2) design with blocks {1,3,4,5,9} + i mod 11.
std::vector<Mask> residue_biplane(bool nonresidues) {
  const std::vector<int> base = nonresidues ? std::vector<int>{2, 6, 7, 8, 10} : std::vector<int>{1, 3, 4, 5, 9};
  std::vector<Mask> blocks;
  for (int i = 0; i < 11; ++i) {
    Mask b = 0;
    for (int r : base) b |= bit((r + i) % 11);
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// Automorphisms of a design on 11 points: incidence graph with the points
// made into a clique so that no duality can swap points and blocks.
PermGroup design_group(const std::vector<Mask>& blocks) {
  const int points = 11;
  Graph g(points + static_cast<int>(blocks.size()));
  for (int a = 0; a < points; ++a)
    for (int b = a + 1; b < points; ++b) g.add_edge(a, b);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int x : mask_to_points(blocks[i])) g.add_edge(x, points + static_cast<int>(i));
  const PermGroup aut = graph_aut(g);
  std::vector<Permutation> gens;
  for (const auto& p : aut.generators()) {
    std::vector<int> images(points);
    for (int x = 0; x < points; ++x) images[static_cast<std::size_t>(x)] = p(x);
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(points, std::move(gens));
}

PermGroup psl_2_11_on_11() { return design_group(residue_biplane(false)); }

PermGroup m11() {
  return PermGroup(11, {from_cycles_1(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                        from_cycles_1(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})});
}

PermGroup m12() {
  return PermGroup(12, {from_cycles_1(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                        from_cycles_1(12, {{3, 7, 11, 8}, {4, 10, 5, 6}}),
                        from_cycles_1(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}})});
}

// M11 permuting the 12 images of a biplane whose stabiliser in M11 is PSL(2,11).
PermGroup m11_on_12() {
  const PermGroup m = m11();
  for (bool nonres : {false, true}) {
    std::vector<std::vector<Mask>> orbit{residue_biplane(nonres)};
    std::map<std::vector<Mask>, int> where{{orbit[0], 0}};
    auto image = [](const std::vector<Mask>& design, const Permutation& p) {
      std::vector<Mask> out;
      for (Mask b : design) out.push_back(p.apply(b));
      std::sort(out.begin(), out.end());
      return out;
    };
    for (std::size_t i = 0; i < orbit.size() && orbit.size() <= 12; ++i)
      for (const auto& gen : m.generators()) {
        auto next = image(orbit[i], gen);
        if (where.emplace(next, static_cast<int>(orbit.size())).second) orbit.push_back(std::move(next));
      }
    if (orbit.size() != 12) continue;
    std::vector<Permutation> gens;
    for (const auto& gen : m.generators()) {
      std::vector<int> images;
      for (const auto& d : orbit) images.push_back(where.at(image(d, gen)));
      gens.push_back(Permutation::from_images(images));
    }
    return PermGroup(12, std::move(gens));
  }
  throw std::logic_error("no biplane with stabiliser PSL(2,11) in M11");
}

PermGroup m22() {
  return PermGroup(22, {from_cycles_1(22, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, {12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22}}),
                        from_cycles_1(22, {{1, 4, 5, 9, 3}, {2, 8, 10, 7, 6}, {12, 15, 16, 20, 14}, {13, 19, 21, 18, 17}}),
                        from_cycles_1(22, {{1, 21}, {2, 10, 8, 6}, {3, 13, 4, 17}, {5, 19, 9, 18}, {11, 22}, {12, 14, 16, 20}})});
}

std::vector<Permutation> m23_generators(int n) {
  std::vector<int> long_cycle(23);
  for (int i = 0; i < 23; ++i) long_cycle[static_cast<std::size_t>(i)] = i + 1;
  return {from_cycles_1(n, {long_cycle}),
          from_cycles_1(n, {{3, 17, 10, 7, 9}, {4, 13, 14, 19, 5}, {8, 18, 11, 12, 23}, {15, 20, 22, 21, 16}})};
}

PermGroup m23() { return PermGroup(23, m23_generators(23)); }

PermGroup m24() {
  auto gens = m23_generators(24);
  gens.push_back(from_cycles_1(24, {{1, 24}, {2, 23}, {3, 12}, {4, 16}, {5, 18}, {6, 10},
                                    {7, 20}, {8, 14}, {9, 21}, {11, 17}, {13, 22}, {15, 19}}));
  return PermGroup(24, std::move(gens));
}

struct Builder {
  CatalogGroupInfo info;
  std::function<PermGroup()> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> list = {
      {{"d10", 5, "dihedral group of the pentagon"},
       [] { return PermGroup(5, {from_cycles_1(5, {{1, 2, 3, 4, 5}}), from_cycles_1(5, {{2, 5}, {3, 4}})}); }},
      {{"agl_1_5", 5, "AGL(1,5)"}, [] { return affine(1, 5, true, false); }},
      {{"psl_2_5", 6, "PSL(2,5) on the projective line"}, [] { return projective(2, 5, false, 0); }},
      {{"pgl_2_5", 6, "PGL(2,5) on the projective line"}, [] { return projective(2, 5, true, 0); }},
      {{"agl_1_7", 7, "AGL(1,7)"}, [] { return affine(1, 7, true, false); }},
      {{"psl_3_2", 7, "PSL(3,2) on the Fano plane"}, [] { return projective(3, 2, false, 0); }},
      {{"agaml_1_8", 8, "AGammaL(1,8)"}, [] { return affine(1, 8, true, true); }},
      {{"psl_2_7", 8, "PSL(2,7) on the projective line"}, [] { return projective(2, 7, false, 0); }},
      {{"pgl_2_7", 8, "PGL(2,7) on the projective line"}, [] { return projective(2, 7, true, 0); }},
      {{"agl_3_2", 8, "AGL(3,2)"}, [] { return affine(3, 2, false, false); }},
      {{"s3wrs2", 9, "S3 wr S2 on the 3x3 grid"}, [] { return grid_group(3); }},
      {{"agaml_1_9", 9, "AGammaL(1,9)"}, [] { return affine(1, 9, true, true); }},
      {{"asl_2_3", 9, "ASL(2,3)"}, [] { return affine(2, 3, false, false); }},
      {{"agl_2_3", 9, "AGL(2,3)"}, [] { return affine(2, 3, true, false); }},
      {{"psl_2_8", 9, "PSL(2,8) on the projective line"}, [] { return projective(2, 8, false, 0); }},
      {{"pgaml_2_8", 9, "PGammaL(2,8) on the projective line"}, [] { return projective(2, 8, false, 1); }},
      {{"a5_on_pairs", 10, "A5 on the 2-subsets of a 5-set"}, [] { return group_on_pairs(5, true); }},
      {{"s5_on_pairs", 10, "S5 on the 2-subsets of a 5-set"}, [] { return group_on_pairs(5); }},
      {{"psl_2_9", 10, "PSL(2,9) on the projective line"}, [] { return projective(2, 9, false, 0); }},
      {{"psigmal_2_9", 10, "PSigmaL(2,9) on the projective line"}, [] { return projective(2, 9, false, 1); }},
      {{"pgl_2_9", 10, "PGL(2,9) on the projective line"}, [] { return projective(2, 9, true, 0); }},
      {{"m10", 10, "M10 = PSL(2,9) extended by x -> w x^3"},
       [] {
         const auto& f = SmallField::get(9);
         auto twist = diagonal_map(2, f, f.primitive_element());
         twist.frobenius_power = 1;
         return projective_group(2, f, with(sl_generators(2, f), {twist}));
       }},
      {{"pgaml_2_9", 10, "PGammaL(2,9) on the projective line"}, [] { return projective(2, 9, true, 1); }},
      {{"psl_2_11_on_11", 11, "PSL(2,11) on the points of the 11-point biplane"}, psl_2_11_on_11},
      {{"m11", 11, "Mathieu group M11"}, m11},
      {{"pgl_2_11", 12, "PGL(2,11) on the projective line"}, [] { return projective(2, 11, true, 0); }},
      {{"m11_on_12", 12, "M11, 3-transitive on 12 points"}, m11_on_12},
      {{"m12", 12, "Mathieu group M12"}, m12},
      {{"psl_3_3", 13, "PSL(3,3) on the projective plane"}, [] { return projective(3, 3, false, 0); }},
      {{"psl_2_13", 14, "PSL(2,13) on the projective line"}, [] { return projective(2, 13, false, 0); }},
      {{"pgl_2_13", 14, "PGL(2,13) on the projective line"}, [] { return projective(2, 13, true, 0); }},
      {{"psl_4_2", 15, "PSL(4,2) on the points of PG(3,2)"}, [] { return projective(4, 2, false, 0); }},
      {{"agaml_2_4", 16, "AGammaL(2,4)"}, [] { return affine(2, 4, true, true); }},
      {{"affine_a6_16", 16, "2^4.A6"}, affine_a6_16},
      {{"affine_sp4_2", 16, "2^4.Sp(4,2) = 2^4.S6"}, affine_sp4_2},
      {{"so4minus_16", 16, "2^4.SO4-(2), affine orthogonal group of an elliptic quadric"}, so4minus_16},
      {{"agl_4_2", 16, "AGL(4,2)"}, [] { return affine(4, 2, false, false); }},
      {{"psl_2_16_2", 17, "PSL(2,16) extended by the field automorphism of order 2"}, [] { return projective(2, 16, false, 2); }},
      {{"pgaml_2_16", 17, "PGammaL(2,16) on the projective line"}, [] { return projective(2, 16, false, 1); }},
      {{"psl_2_17", 18, "PSL(2,17) on the projective line"}, [] { return projective(2, 17, false, 0); }},
      {{"s7_on_pairs", 21, "S7 on the 2-subsets of a 7-set"}, [] { return group_on_pairs(7); }},
      {{"pgaml_3_4", 21, "PGammaL(3,4) on the projective plane"}, [] { return projective(3, 4, true, 1); }},
      {{"m22", 22, "Mathieu group M22"}, m22},
      {{"m23", 23, "Mathieu group M23"}, m23},
      {{"m24", 24, "Mathieu group M24"}, m24},
      {{"psigmal_2_25", 26, "PSigmaL(2,25) on the projective line"}, [] { return projective(2, 25, false, 1); }},
      {{"agl_5_2", 32, "AGL(5,2)"}, [] { return affine(5, 2, false, false); }},
  };
  return list;
}

std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  const auto digits = name.substr(prefix.size());
  int value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
  return value;
}

int pair_count(int m) { return m * (m - 1) / 2; }

}  // namespace

const std::vector<CatalogGroupInfo>& catalog_groups() {
  static const std::vector<CatalogGroupInfo> infos = [] {
    std::vector<CatalogGroupInfo> out;
    for (const auto& b : builders()) out.push_back(b.info);
    return out;
  }();
  return infos;
}

PermGroup catalog_group(std::string_view name) {
  for (const auto& b : builders())
    if (b.info.name == name) return b.build();
  if (auto n = suffix_number(name, "sym_"); n && *n >= 1 && *n <= kMaxDegree) return PermGroup::symmetric(*n);
  if (auto m = suffix_number(name, "pairs_"); m && *m >= 3 && pair_count(*m) <= kMaxDegree) return group_on_pairs(*m);
  if (auto m = suffix_number(name, "grid_"); m && *m >= 2 && *m * *m <= kMaxDegree) return grid_group(*m);
  throw DomainError("unknown group name: " + std::string(name));
}

PermGroup group_on_pairs(int m, bool alternating) {
  if (m < 3 || pair_count(m) > kMaxDegree) throw DomainError("group_on_pairs: m out of range");
  std::vector<Permutation> base;
  if (alternating) {
    // (0 1 ... m-1) or (1 ... m-1), whichever is even, with (0 1 2).
    std::vector<int> cyc;
    for (int i = (m % 2 == 1) ? 0 : 1; i < m; ++i) cyc.push_back(i);
    base = {Permutation::from_cycles(m, {cyc}), Permutation::from_cycles(m, {{0, 1, 2}})};
  } else {
    std::vector<int> cyc(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cyc[static_cast<std::size_t>(i)] = i;
    base = {Permutation::from_cycles(m, {cyc}), Permutation::from_cycles(m, {{0, 1}})};
  }
  std::vector<Permutation> gens;
  for (const auto& p : base) {
    std::vector<int> images;
    for (int r = 0; r < pair_count(m); ++r) {
      const auto [a, b] = unrank_pair(static_cast<std::uint32_t>(r));
      images.push_back(static_cast<int>(rank_pair(p(a), p(b))));
    }
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(pair_count(m), std::move(gens));
}

PermGroup grid_group(int m) {
  if (m < 2 || m * m > kMaxDegree) throw DomainError("grid_group: m out of range");
  const int n = m * m;
  auto on_grid = [&](auto&& f) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        const auto [r2, c2] = f(r, c);
        images[static_cast<std::size_t>(r * m + c)] = r2 * m + c2;
      }
    return Permutation::from_images(images);
  };
  return PermGroup(n, {on_grid([&](int r, int c) { return std::pair{(r + 1) % m, c}; }),
                       on_grid([&](int r, int c) { return std::pair{r < 2 ? 1 - r : r, c}; }),
                       on_grid([&](int r, int c) { return std::pair{c, r}; })});
}

Graph paley_graph(int q) {
  if (q % 4 != 1) throw DomainError("Paley graphs need q = 1 mod 4");
  const auto& f = SmallField::get(q);
  Graph g(q);
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y)
      if (f.is_square(f.sub(x, y))) g.add_edge(x, y);
  return g;
}

TwoGraph paley_two_graph(int q) {
  if (q != 5 && q != 9 && q != 13 && q != 17 && q != 25)
    throw DomainError("paley_two_graph: q must be one of 5, 9, 13, 17, 25");
  const Graph p = paley_graph(q);
  Graph g(q + 1);
  for (auto [a, b] : p.edges()) g.add_edge(a, b);
  return two_graph_of(g);
}

TwoGraph symplectic_two_graph_16() {
  TripleSet t(16);
  for (int z = 2; z < 16; ++z)
    for (int y = 1; y < z; ++y)
      for (int x = 0; x < y; ++x)
        if ((symplectic_form(x, y) + symplectic_form(y, z) + symplectic_form(z, x)) % 2 == 0) t.insert(rank_triple(x, y, z));
  return TwoGraph(std::move(t));
}

TwoGraph kneser_two_graph(int m) {
  if (m < 4 || pair_count(m) > kMaxDegree) throw DomainError("kneser_two_graph: m out of range");
  const int n = pair_count(m);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto a = unrank_pair(static_cast<std::uint32_t>(i)), b = unrank_pair(static_cast<std::uint32_t>(j));
      if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]) g.add_edge(i, j);
    }
  return two_graph_of(g);
}

TwoGraph grid_two_graph(int m) {
  if (m < 2 || m * m > kMaxDegree) throw DomainError("grid_two_graph: m out of range");
  const int n = m * m;
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (i / m == j / m || i % m == j % m) g.add_edge(i, j);
  return two_graph_of(g);
}

namespace {

enum class PairShape { triangle, star, path, edge_plus_path };

PairShape shape_of_triple(std::uint32_t rank) {
  std::array<int, 5> deg{};
  for (int p : unrank_triple(rank))
    for (int v : unrank_pair(static_cast<std::uint32_t>(p))) ++deg[static_cast<std::size_t>(v)];
  const int top = *std::max_element(deg.begin(), deg.end());
  const auto touched = std::count_if(deg.begin(), deg.end(), [](int d) { return d > 0; });
  if (top == 3) return PairShape::star;
  if (touched == 3) return PairShape::triangle;
  if (touched == 4) return PairShape::path;
  return PairShape::edge_plus_path;
}

}  // namespace

std::pair<TwoGraph, TwoGraph> a5_two_graphs() {
  const auto orbits = group_on_pairs(5, true).orbits_on_triples();
  std::vector<std::size_t> paths;
  std::size_t star = orbits.size();
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto s = shape_of_triple(orbits.orbits[i].front());
    if (s == PairShape::path) paths.push_back(i);
    if (s == PairShape::star) star = i;
  }
  if (paths.size() != 2 || star == orbits.size()) throw std::logic_error("unexpected A5 orbits on triples of pairs");
  return {TwoGraph(from_orbit_union(orbits, {paths[0], star})), TwoGraph(from_orbit_union(orbits, {paths[1], star}))};
}

const std::array<int, 10>& a5_paley_labelling() {
  static const std::array<int, 10> table = {0, 1, 3, 6, 2, 9, 7, 5, 8, 4};
  return table;
}

const std::vector<CatalogTwoGraphInfo>& catalog_two_graphs() {
  static const std::vector<CatalogTwoGraphInfo> list = {
      {"pentagon", 5, "two-graph of the 5-cycle"},
      {"paley_5", 6, "Paley two-graph, q = 5 (icosahedron class)"},
      {"paley_9", 10, "Paley two-graph, q = 9 (Petersen class)"},
      {"paley_13", 14, "Paley two-graph, q = 13"},
      {"paley_17", 18, "Paley two-graph, q = 17"},
      {"paley_25", 26, "Paley two-graph, q = 25"},
      {"grid_3", 9, "3x3 rook's graph"},
      {"grid_4", 16, "4x4 rook's graph"},
      {"symplectic_16", 16, "symplectic two-graph on F_2^4 (Clebsch class)"},
      {"kneser_5", 10, "pairs of a 5-set; complement of the Petersen two-graph"},
      {"kneser_7", 21, "pairs of a 7-set; complement of the Kneser two-graph"},
      {"a5_first", 10, "A5-invariant: first path orbit plus stars"},
      {"a5_second", 10, "A5-invariant: second path orbit plus stars"},
  };
  return list;
}

TwoGraph catalog_two_graph(std::string_view name) {
  if (name == "pentagon") return two_graph_of(Graph::cycle(5));
  if (name == "symplectic_16") return symplectic_two_graph_16();
  if (name == "a5_first") return a5_two_graphs().first;
  if (name == "a5_second") return a5_two_graphs().second;
  if (auto q = suffix_number(name, "paley_")) return paley_two_graph(*q);
  if (auto m = suffix_number(name, "grid_")) return grid_two_graph(*m);
  if (auto m = suffix_number(name, "kneser_")) return kneser_two_graph(*m);
  throw DomainError("unknown two-graph name: " + std::string(name));
}

}  // namespace switchscan
