// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "parallel.hpp"
#include "switchscan/autom.hpp"
#include "switchscan/catalog.hpp"
#include "switchscan/counting.hpp"
#include "switchscan/report_json.hpp"
#include "switchscan/search.hpp"

using namespace switchscan;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ScanOptions parallel_options(ScanMode mode) {
  ScanOptions o;
  o.mode = mode;
  const auto workers = default_workers();
  o.executor = thread_executor(workers);
  o.shards = workers > 1 ? workers * 16 : 1;
  return o;
}

std::vector<std::string> catalog_names(int max_degree) {
  std::vector<std::string> out;
  for (const auto& info : catalog_groups())
    if (info.degree <= max_degree) out.push_back(info.name);
  return out;
}

// Every G-invariant two-graph that is a union of triple orbits (including none).
std::vector<TripleSet> invariant_two_graphs(const PermGroup& g) {
  const auto orbits = g.orbits_on_triples();
  std::vector<TripleSet> out;
  for (Mask sel = 0; sel < bit(static_cast<int>(orbits.size())); ++sel) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if ((sel >> i) & 1U) chosen.push_back(i);
    auto t = from_orbit_union(orbits, chosen);
    if (is_two_graph(t)) out.push_back(std::move(t));
  }
  return out;
}

// Shape of three 2-subsets as a graph with three edges, numbered as the
// orbits of Sym(m) on triples of pairs: 1 star, 2 triangle, 3 path,
// 4 edge plus path, 5 matching.
int pair_shape(std::uint32_t r) {
  const auto t = unrank_triple(r);
  Mask support = 0;
  std::map<int, int> degree;
  for (int i : t) {
    const auto p = unrank_pair(static_cast<std::uint32_t>(i));
    support |= bit(p[0]) | bit(p[1]);
    ++degree[p[0]];
    ++degree[p[1]];
  }
  switch (popcount(support)) {
    case 3: return 2;
    case 4: return std::any_of(degree.begin(), degree.end(), [](auto& d) { return d.second == 3; }) ? 1 : 3;
    case 5: return 4;
    default: return 5;
  }
}

// Grid triples by collinear pairs: 1 all three collinear, 2 exactly one
// collinear pair, 3 two collinear pairs, 4 none.
int grid_shape(std::uint32_t r, int m) {
  const auto t = unrank_triple(r);
  auto collinear = [m](int a, int b) { return a / m == b / m || a % m == b % m; };
  const int pairs = collinear(t[0], t[1]) + collinear(t[0], t[2]) + collinear(t[1], t[2]);
  switch (pairs) {
    case 3: return 1;
    case 1: return 2;
    case 2: return 3;
    default: return 4;
  }
}

// Maps library orbit indices to shape labels; fails unless each orbit is a single shape.
std::optional<std::vector<int>> orbit_labels(const TripleOrbits& orbits, const std::function<int(std::uint32_t)>& shape) {
  std::vector<int> label;
  for (const auto& o : orbits.orbits) {
    const int s = shape(o.front());
    for (auto r : o)
      if (shape(r) != s) return std::nullopt;
    label.push_back(s);
  }
  std::set<int> distinct(label.begin(), label.end());
  if (distinct.size() != label.size()) return std::nullopt;
  return label;
}

std::vector<int> labelled_profile(Mask x, const TripleOrbits& orbits, const std::vector<int>& label, int size) {
  const auto prof = triple_orbit_profile(x, orbits);
  std::vector<int> out(static_cast<std::size_t>(size), 0);
  for (std::size_t i = 0; i < prof.size(); ++i) out[static_cast<std::size_t>(label[i] - 1)] += prof[i];
  return out;
}

// Brute-force canonical form of a triple set: least sorted rank list over all relabellings.
std::vector<std::uint32_t> canonical_triples(const TripleSet& t) {
  std::vector<std::uint32_t> best;
  bool first = true;
  oracle::for_each_permutation(t.n(), [&](const Permutation& p) {
    std::vector<std::uint32_t> img;
    for (auto r : t.ranks()) img.push_back(apply_to_triple(p, r));
    std::sort(img.begin(), img.end());
    if (first || img < best) best = std::move(img);
    first = false;
  });
  return best;
}

std::vector<std::uint64_t> canonical_graph(const Graph& g) {
  std::vector<std::uint64_t> best;
  bool first = true;
  oracle::for_each_permutation(g.n(), [&](const Permutation& p) {
    std::vector<std::uint64_t> img;
    for (auto [u, v] : g.edges()) img.push_back(rank_pair(p(u), p(v)));
    std::sort(img.begin(), img.end());
    if (first || img < best) best = std::move(img);
    first = false;
  });
  return best;
}

Outcome criterion1() {
  Outcome out;
  const auto start = Clock::now();
  std::vector<NamedGroup> groups;
  for (const auto& name : catalog_names(16)) groups.push_back({name, catalog_group(name)});
  const auto reports = exception_scan(groups, parallel_options(ScanMode::exhaustive));
  std::multiset<std::pair<int, std::string>> found;
  for (const auto& r : reports) {
    const auto j = to_json(r);
    out.require(!j.contains("error"), r.group_name + " failed: " + r.error);
    for (const auto& c : j["candidates"]) {
      if (c["status"] != "exception") continue;
      found.insert({j["group"]["degree"].get<int>(), c["aut_order"].get<std::string>()});
      const int n = j["group"]["degree"].get<int>();
      out.require(c["scanned"].get<std::uint64_t>() == class_size(n), "incomplete scan at degree " + std::to_string(n));
      out.require(c["aut_order"].get<std::string>() == j["group"]["order"].dump(), "aut order differs from group order");
    }
  }
  const std::multiset<std::pair<int, std::string>> expected{
      {5, "10"}, {6, "60"}, {9, "72"}, {10, "720"}, {14, "1092"}, {16, "11520"}};
  out.require(found == expected, "exception list differs");
  out.detail << " " << found.size() << " exceptions among " << groups.size() << " groups of degree <= 16:";
  for (const auto& [n, order] : found) out.detail << " (" << n << ", " << order << ")";
  out.detail << ", each a full scan of 2^(n-1) graphs, " << seconds_since(start) << " s";
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto start = Clock::now();
  const auto g = catalog_group("psl_2_17");
  const auto r = classify_group("psl_2_17", g, parallel_options(ScanMode::fast));
  const double elapsed = seconds_since(start);
  const auto found = r.with_status(CandidateStatus::witness_found);
  out.require(r.with_status(CandidateStatus::exception).empty(), "exception reported");
  out.require(!found.empty(), "no witness");
  for (const auto* c : found) {
    const auto member = switch_set(isolated_vertex_representative(c->triples), c->witness.value());
    out.require(graph_aut(member).order() == 1, "witness does not revalidate");
    out.require(c->aut_order == g.order(), "candidate group is not PSL(2,17)");
  }
  out.require(elapsed < 60, "slower than 60 s");
  out.detail << " " << found.size() << " Paley class witness(es), |Aut| = 1 recomputed, " << elapsed << " s";
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto members = switching_class(isolated_vertex_representative(paley_two_graph(5)));
  out.require(members.size() == 32, "class size");
  std::vector<Graph> reps;
  std::vector<int> counts;
  for (const auto& m : members) {
    std::size_t i = 0;
    while (i < reps.size() && !find_isomorphism(reps[i], m)) ++i;
    if (i == reps.size()) {
      reps.push_back(m);
      counts.push_back(0);
    }
    ++counts[i];
  }
  std::sort(counts.begin(), counts.end());
  out.require(counts == std::vector<int>{6, 6, 10, 10}, "multiplicities from the isomorphism search");
  // Independent count by brute-force canonical forms.
  std::map<std::vector<std::uint64_t>, int> canon;
  for (const auto& m : members) ++canon[canonical_graph(m)];
  std::vector<int> brute;
  for (const auto& [k, v] : canon) brute.push_back(v);
  std::sort(brute.begin(), brute.end());
  out.require(brute == counts, "brute-force multiplicities differ");
  out.detail << " " << counts.size() << " isomorphism types with multiplicities";
  for (int c : counts) out.detail << " " << c;
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto r = classify_group("a5_on_pairs", catalog_group("a5_on_pairs"));
  std::vector<const Candidate*> survivors;
  for (const auto& c : r.candidates)
    if (c.status == CandidateStatus::witness_found || c.status == CandidateStatus::exception) survivors.push_back(&c);
  out.require(survivors.size() == 2, "expected two surviving two-graphs");
  for (const auto* c : survivors) {
    out.require(c->aut_order == BigInt(60), "aut order");
    out.require(c->status == CandidateStatus::witness_found, "missing witness");
    if (c->witness)
      out.require(has_trivial_aut(switch_set(isolated_vertex_representative(c->triples), *c->witness)), "witness");
  }
  if (survivors.size() == 2) {
    const auto& label = a5_paley_labelling();
    const auto relabel = Permutation::from_images(std::vector<int>(label.begin(), label.end()));
    const auto diff = symmetric_difference(survivors[0]->triples, survivors[1]->triples).permuted(relabel);
    out.require(diff == paley_two_graph(9).triples(), "symmetric difference is not the Paley two-graph");
    const auto [first, second] = a5_two_graphs();
    out.require(std::set<std::vector<std::uint32_t>>{survivors[0]->triples.ranks(), survivors[1]->triples.ranks()} ==
                    std::set<std::vector<std::uint32_t>>{first.triples().ranks(), second.triples().ranks()},
                "survivors differ from the catalog pair");
    out.detail << " 2 survivors of order 60 with witnesses; symmetric difference (" << diff.count()
               << " triples) equals paley_two_graph(9) under the frozen labelling";
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  std::uint64_t checks = 0;
  int groups = 0;
  for (const auto& name : catalog_names(10)) {
    const auto g = catalog_group(name);
    ++groups;
    for (const auto& t : invariant_two_graphs(g)) {
      const auto rep = isolated_vertex_representative(t);
      std::vector<Graph> members;
      for (Mask x = 0; x < class_size(g.degree()); ++x) members.push_back(oracle::switch_by_pairs(rep, x));
      g.for_each_element([&](const Permutation& p) {
        std::uint64_t fixed = 0;
        for (const auto& m : members) fixed += m.permuted(p) == m;
        ++checks;
        if (BigInt(fixed) != fix_W(p)) {
          out.require(false, name + " element " + to_cycle_string(p));
        }
      });
    }
  }
  out.detail << " " << checks << " (group element, invariant class) pairs over " << groups << " groups";
  return out;
}

Outcome criterion6() {
  Outcome out;
  int groups = 0;
  for (const auto& name : catalog_names(10)) {
    const auto g = catalog_group(name);
    ++groups;
    out.require(orbits_on_switching_classes(g) == oracle::orbits_on_W(g.degree(), g.generators()), name);
  }
  out.detail << " " << groups << " catalog groups match explicit orbits on W;";
  const std::map<int, int> expected{{4, 3}, {5, 7}, {6, 16}};
  for (const auto& [n, value] : expected) {
    // Every graph on n points, reduced to its two-graph, then to a canonical form.
    std::set<std::vector<std::uint32_t>> two_graphs;
    const int pairs = n * (n - 1) / 2;
    for (Mask bits = 0; bits < bit(pairs); ++bits) {
      Graph g(n);
      for (int r = 0; r < pairs; ++r)
        if ((bits >> r) & 1U) {
          const auto e = unrank_pair(static_cast<std::uint32_t>(r));
          g.add_edge(e[0], e[1]);
        }
      TripleSet t(n);
      for (std::uint32_t r = 0; r < t.universe(); ++r) {
        const auto [a, b, c] = unrank_triple(r);
        if ((g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c)) % 2) t.insert(r);
      }
      two_graphs.insert(t.ranks());
    }
    std::set<std::vector<std::uint32_t>> classes;
    for (const auto& ranks : two_graphs) classes.insert(canonical_triples(TripleSet::from_ranks(n, ranks)));
    const auto burnside = orbits_on_all_switching_classes(PermGroup::symmetric(n));
    out.require(classes.size() == static_cast<std::size_t>(value), "enumeration at n = " + std::to_string(n));
    out.require(burnside == value, "Burnside at n = " + std::to_string(n));
    out.detail << " Sym(" << n << "): " << classes.size() << " enumerated, " << burnside << " by Burnside;";
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  int absent = 0;
  for (const auto& e : seress_list()) {
    if (e.degree > 13) continue;
    if (e.catalog.empty()) {
      out.require(false, std::string(e.name) + " not in the catalog");
      continue;
    }
    const auto x = regular_subset_orbit(catalog_group(e.catalog));
    out.require(!x.has_value(), std::string(e.name) + " has a regular subset");
    absent += !x.has_value();
  }
  out.detail << " " << absent << " list groups of degree <= 13 have no regular subset;";

  // 2^4.SO4-(2) has no regular subset with fewer than 8 = n/2 points, but
  // does have regular subsets of size 8; both facts are checked.
  const auto so4 = catalog_group("so4minus_16");
  out.require(!regular_subset_orbit(so4, 7).has_value(), "SO4-(2) has a regular subset of size < 8");
  const auto half = regular_subset_orbit(so4);
  if (half) {
    out.require(popcount(*half) == 8, "smallest regular subset of SO4-(2) is not of size 8");
    out.require(has_trivial_set_stabilizer(so4, *half), "SO4-(2) subset does not validate");
    out.detail << " 2^4.SO4-(2): none of size < 8, least regular subset has size 8: " << points_json(*half).dump()
               << ";";
  }

  const auto a5 = catalog_group("a5_on_pairs");
  const auto x = regular_subset_orbit(a5);
  out.require(x.has_value(), "A5 on pairs has no regular subset");
  if (x) {
    const auto elements = oracle::closure(10, a5.generators());
    out.require(oracle::trivial_stabilizer(elements, *x), "A5 subset fails the brute-force check");
    out.detail << " A5 on pairs: " << points_json(*x).dump() << " validated";
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  const auto pairs = group_on_pairs(7).orbits_on_triples();
  const auto pair_label = orbit_labels(pairs, pair_shape);
  out.require(pair_label && pair_label->size() == 5, "Sym(7) orbits on triples of pairs are not the five shapes");
  const auto grid = grid_group(4).orbits_on_triples();
  const auto grid_label = orbit_labels(grid, [](std::uint32_t r) { return grid_shape(r, 4); });
  out.require(grid_label && grid_label->size() == 4, "grid orbits are not the four collinearity types");
  if (!out.pass) return out;

  TripleSet o124(21), o12(16);
  for (std::uint32_t r = 0; r < o124.universe(); ++r)
    if (const int s = pair_shape(r); s == 1 || s == 2 || s == 4) o124.insert(r);
  for (std::uint32_t r = 0; r < o12.universe(); ++r)
    if (grid_shape(r, 4) <= 2) o12.insert(r);
  out.require(kneser_two_graph(7).triples() == o124, "kneser_two_graph(7) != O1+O2+O4");
  out.require(grid_two_graph(4).triples() == o12, "grid_two_graph(4) != O1+O2");

  // x = {ab, ac, ad, ef} with a..f = 0..5; y = {(a,a), (a,b), (a,c), (b,a)} with a, b, c = 0, 1, 2.
  const Mask x = bit(static_cast<int>(rank_pair(0, 1))) | bit(static_cast<int>(rank_pair(0, 2))) |
                 bit(static_cast<int>(rank_pair(0, 3))) | bit(static_cast<int>(rank_pair(4, 5)));
  const Mask y = bit(0) | bit(1) | bit(2) | bit(4);
  const auto px = labelled_profile(x, pairs, *pair_label, 5);
  const auto py = labelled_profile(y, grid, *grid_label, 4);
  out.require(px == std::vector<int>{1, 0, 0, 3, 0}, "pairs profile");
  out.require(py == std::vector<int>{1, 1, 2, 0}, "grid profile");
  auto show = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  out.detail << " kneser(7) = O1+O2+O4 (" << o124.count() << " triples), grid(4) = O1+O2 (" << o12.count()
             << " triples), profiles " << show(px) << " and " << show(py);
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> graph_n(1, 7), triple_n(3, 6);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_graph(graph_n(rng), rng, density(rng));
    out.require(graph_aut(g).order() == oracle::graph_aut_order(g), "graph " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const auto t = oracle::random_triples(triple_n(rng), rng, density(rng));
    out.require(hypergraph_aut(t).order() == oracle::triple_aut_order(t), "triple system " + std::to_string(i));
  }
  std::uint64_t elements = 0;
  int groups = 0;
  for (const auto& name : catalog_names(12)) {
    const auto g = catalog_group(name);
    ++groups;
    g.for_each_element([&](const Permutation& p) {
      ++elements;
      if (fix_W(p) != oracle::fix_W(p)) out.require(false, name + " fix_W");
    });
  }
  out.detail << " 200 graphs, 100 triple systems, fix_W on " << elements << " elements of " << groups << " groups";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"six exceptions", criterion1},      {"PSL(2,17) witness", criterion2}, {"icosahedron class", criterion3},
      {"A5 on pairs", criterion4},         {"Mallows-Sloane", criterion5},    {"Burnside counts", criterion6},
      {"regular subsets", criterion7},     {"proof fixtures", criterion8},    {"brute-force oracles", criterion9}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " (" << criteria[i].first << "):"
              << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
