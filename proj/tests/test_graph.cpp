#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "switchscan/graph.hpp"

using namespace switchscan;

TEST_CASE("edges and basic constructors") {
  const auto c5 = Graph::cycle(5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(Graph::complete(6).edge_count() == 15);
  CHECK(complement(Graph::complete(6)) == Graph(6));
  const auto g = Graph::from_edges(4, {{2, 0}, {1, 3}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("switching a 5-cycle at one vertex") {
  auto g = switch_set(Graph::cycle(5), bit(0));
  // 0 was joined to 1 and 4; now to 2 and 3.
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}});
  auto h = Graph::cycle(5);
  h.switch_vertex(0);
  CHECK(h == g);
}

TEST_CASE("switching agrees with the pairwise definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const auto g = oracle::random_graph(n, rng);
    const Mask x = rng() & low_mask(n), y = rng() & low_mask(n);
    CHECK(switch_set(g, x) == oracle::switch_by_pairs(g, x));
    CHECK(switch_set(g, x) == switch_set(g, x ^ low_mask(n)));
    CHECK(switch_set(switch_set(g, x), x) == g);
    CHECK(switch_compose_law_check(g, x, y));
    CHECK(switch_set(switch_set(g, x), y) == switch_set(g, x ^ y));
  }
}

TEST_CASE("permuting a graph") {
  const auto p = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  CHECK(Graph::cycle(5).permuted(p) == Graph::cycle(5));
  CHECK(is_automorphism(Graph::cycle(5), p));
  const auto t = Permutation::from_cycles(5, {{0, 1}});
  CHECK_FALSE(is_automorphism(Graph::cycle(5), t));
  std::mt19937_64 rng(3);
  const auto g = oracle::random_graph(8, rng);
  const auto q = Permutation::from_cycles(8, {{0, 5, 2}, {3, 7}});
  const auto h = g.permuted(q);
  for (auto [u, v] : g.edges()) CHECK(h.adjacent(q(u), q(v)));
  CHECK(h.edge_count() == g.edge_count());
  CHECK(g.permuted(q).permuted(q.inverse()) == g);
}

TEST_CASE("Gray scan covers each class member once") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 5, 8}) {
    const auto g = oracle::random_graph(n, rng);
    std::set<std::vector<std::pair<int, int>>> members;
    SwitchingClassCursor cur(g);
    std::uint64_t steps = 0;
    for (; !cur.done(); cur.advance(), ++steps) {
      CHECK((cur.switching_set() & bit(n - 1)) == 0);
      CHECK(cur.graph() == switch_set(g, cur.switching_set()));
      members.insert(cur.graph().edges());
    }
    CHECK(steps == class_size(n));
    CHECK(members.size() == class_size(n));
    CHECK(switching_class(g).size() == class_size(n));
  }
}

TEST_CASE("cursor over a sub-range") {
  std::mt19937_64 rng(9);
  const auto g = oracle::random_graph(7, rng);
  const auto all = switching_class(g);
  SwitchingClassCursor cur(g, 17, 40);
  for (std::uint64_t i = 17; i < 40; ++i, cur.advance()) {
    REQUIRE_FALSE(cur.done());
    CHECK(cur.index() == i);
    CHECK(cur.graph() == all[i]);
  }
  CHECK(cur.done());
}

TEST_CASE("even valency representative") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + 2 * static_cast<int>(rng() % 4);
    const auto g = oracle::random_graph(n, rng);
    const auto e = even_valency_representative(g);
    int even_members = 0;
    for (const auto& m : switching_class(g)) {
      bool even = true;
      for (int v = 0; v < n; ++v) even = even && m.degree(v) % 2 == 0;
      if (even) {
        ++even_members;
        CHECK(m == e);
      }
    }
    CHECK(even_members == 1);
  }
  CHECK_THROWS(even_valency_representative(Graph(4)));
}
