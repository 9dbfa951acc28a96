#include <doctest.h>

#include "oracles.hpp"
#include "switchscan/autom.hpp"
#include "switchscan/catalog.hpp"
#include "switchscan/field.hpp"

using namespace switchscan;

TEST_CASE("field tables satisfy the field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32, 49, 64}) {
    CAPTURE(q);
    const auto& f = SmallField::get(q);
    CHECK(f.order() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.frobenius(f.add(a, 1)) == f.add(f.frobenius(a), 1));
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        const int c = (a * 7 + b * 3 + 1) % q;
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      }
    }
    // The primitive element generates every nonzero element.
    std::vector<bool> hit(static_cast<std::size_t>(q), false);
    for (int e = 0; e < q - 1; ++e) hit[static_cast<std::size_t>(f.pow(f.primitive_element(), e))] = true;
    CHECK(std::count(hit.begin() + 1, hit.end(), true) == q - 1);
    int squares = 0;
    for (int a = 1; a < q; ++a) squares += f.is_square(a);
    CHECK(squares == (q % 2 ? (q - 1) / 2 : q - 1));
  }
  CHECK_THROWS_AS(SmallField::get(6), DomainError);
  CHECK_THROWS_AS(SmallField::get(3).inv(0), DomainError);
  // GF(9) = GF(3)[i]: i * i = -1 = 2.
  CHECK(SmallField::get(9).mul(3, 3) == 2);
}

TEST_CASE("projective and affine point sets") {
  const auto& f = SmallField::get(4);
  CHECK(projective_points(2, f).size() == 5);
  CHECK(projective_points(3, f).size() == 21);
  CHECK(affine_points(2, f).size() == 16);
  const auto line = projective_points(2, SmallField::get(7));
  CHECK(line[3] == std::vector<int>{3, 1});
  CHECK(line[7] == std::vector<int>{1, 0});
}

TEST_CASE("catalog group orders") {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"d10", "10"},           {"agl_1_5", "20"},          {"psl_2_5", "60"},
      {"pgl_2_5", "120"},      {"agl_1_7", "42"},          {"psl_3_2", "168"},
      {"agaml_1_8", "168"},    {"psl_2_7", "168"},         {"pgl_2_7", "336"},
      {"agl_3_2", "1344"},     {"s3wrs2", "72"},           {"agaml_1_9", "144"},
      {"asl_2_3", "216"},      {"agl_2_3", "432"},         {"psl_2_8", "504"},
      {"pgaml_2_8", "1512"},   {"a5_on_pairs", "60"},      {"s5_on_pairs", "120"},
      {"psl_2_9", "360"},      {"psigmal_2_9", "720"},     {"pgl_2_9", "720"},
      {"m10", "720"},          {"pgaml_2_9", "1440"},      {"psl_2_11_on_11", "660"},
      {"m11", "7920"},         {"pgl_2_11", "1320"},       {"m11_on_12", "7920"},
      {"m12", "95040"},        {"psl_3_3", "5616"},        {"psl_2_13", "1092"},
      {"pgl_2_13", "2184"},    {"psl_4_2", "20160"},       {"agaml_2_4", "5760"},
      {"affine_a6_16", "5760"}, {"affine_sp4_2", "11520"}, {"so4minus_16", "1920"},
      {"agl_4_2", "322560"},   {"psl_2_16_2", "8160"},     {"pgaml_2_16", "16320"},
      {"psl_2_17", "2448"},    {"s7_on_pairs", "5040"},    {"pgaml_3_4", "120960"},
      {"m22", "443520"},       {"m23", "10200960"},        {"m24", "244823040"},
      {"psigmal_2_25", "15600"}, {"agl_5_2", "319979520"}};
  CHECK(catalog_groups().size() == expected.size());
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    const auto g = catalog_group(name);
    CHECK(g.order() == BigInt(order));
    CHECK(g.is_primitive());
  }
  for (const auto& info : catalog_groups()) CHECK(catalog_group(info.name).degree() == info.degree);
}

TEST_CASE("catalog families and errors") {
  CHECK(catalog_group("sym_6").order() == 720);
  CHECK(catalog_group("pairs_6").degree() == 15);
  CHECK(catalog_group("pairs_6").order() == 720);
  CHECK(catalog_group("grid_4").order() == 1152);
  CHECK_THROWS_AS(catalog_group("nonsense"), DomainError);
  CHECK_THROWS_AS(catalog_group("sym_99"), DomainError);
  CHECK(group_on_pairs(5, true).order() == 60);
}

TEST_CASE("Mathieu groups are multiply transitive") {
  // Point stabiliser of M11 on 11 points is M10, transitive on the rest.
  const auto m11 = catalog_group("m11");
  const auto sizes = m11.basic_orbit_sizes();
  REQUIRE(sizes.size() >= 4);
  CHECK(sizes[0] == 11);
  CHECK(sizes[1] == 10);
  CHECK(sizes[2] == 9);
  CHECK(sizes[3] == 8);
  const auto m24 = catalog_group("m24");
  CHECK(m24.basic_orbit_sizes()[4] == 20);
}

TEST_CASE("Paley graphs") {
  for (int q : {5, 9, 13, 17, 25}) {
    CAPTURE(q);
    const auto g = paley_graph(q);
    for (int v = 0; v < q; ++v) CHECK(g.degree(v) == (q - 1) / 2);
    CHECK(find_isomorphism(g, complement(g)).has_value());
    const auto t = paley_two_graph(q);
    CHECK(t.n() == q + 1);
    CHECK(2 * t.count() == triple_count(q + 1));
  }
  CHECK_THROWS_AS(paley_graph(7), DomainError);
}

TEST_CASE("automorphism groups of catalog two-graphs") {
  const std::vector<std::pair<std::string, int>> expected{
      {"pentagon", 10},  {"paley_5", 60},  {"paley_9", 720},     {"paley_13", 1092}, {"paley_17", 2448},
      {"paley_25", 15600}, {"grid_3", 72}, {"grid_4", 11520}, {"symplectic_16", 11520},
      {"kneser_5", 720}, {"kneser_7", 5040}, {"a5_first", 60},   {"a5_second", 60}};
  CHECK(catalog_two_graphs().size() == expected.size());
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    const auto t = catalog_two_graph(name);
    CHECK(hypergraph_aut(t).order() == order);
  }
  // The complement of the grid two-graph is the symplectic one, relabelled.
  CHECK(find_isomorphism(symplectic_two_graph_16().triples(), grid_two_graph(4).triples().complemented()).has_value());
  // Intersecting pairs of a 5-set: the complement of the Petersen graph, in the Paley class.
  CHECK(find_isomorphism(kneser_two_graph(5).triples(), paley_two_graph(9).triples()).has_value());
}

TEST_CASE("A5 two-graphs and the frozen Paley labelling") {
  const auto [first, second] = a5_two_graphs();
  const auto a5 = catalog_group("a5_on_pairs");
  for (const auto& t : {first, second}) {
    for (const auto& gen : a5.generators()) CHECK(t.triples().invariant_under(gen));
    CHECK(is_full_group(t.triples(), a5));
  }
  const auto& label = a5_paley_labelling();
  const auto relabel = Permutation::from_images(std::vector<int>(label.begin(), label.end()));
  CHECK(symmetric_difference(first.triples(), second.triples()).permuted(relabel) == paley_two_graph(9).triples());
}
