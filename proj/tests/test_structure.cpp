#include <doctest.h>

#include <algorithm>

#include "cycgrp/census.hpp"
#include "cycgrp/constructions.hpp"
#include "cycgrp/error.hpp"
#include "cycgrp/structure.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cycgrp;

namespace {

Elem first_of_order(const Group& g, std::size_t k) {
  for (Elem a = 0; a < g.order(); ++a)
    if (element_order(g, a) == k) return a;
  FAIL("no element of order " << k);
  return 0;
}

std::set<std::vector<int>> as_sets(const std::vector<ElementSet>& subs) {
  std::set<std::vector<int>> out;
  for (const auto& s : subs) {
    std::vector<int> v;
    for (auto e : s.elements()) v.push_back(e);
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("center") {
  const auto c6 = cyclic(6);
  CHECK(center(c6).size() == 6);
  CHECK(center(dicyclic(8)).size() == 2);
  CHECK(center(symmetric(3)).size() == 1);
}

TEST_CASE("centralizer") {
  const auto d10 = dihedral(10);
  CHECK(centralizer(d10, 0).size() == 10);
  for (Elem r = 1; r < 5; ++r) CHECK(centralizer(d10, r).size() == 5);
  const auto d12 = dihedral(12);
  const auto x = first_of_order(d12, 3);
  CHECK(d12.order() / centralizer(d12, x).size() == 2);
}

TEST_CASE("normality and normalizers") {
  const auto s3 = symmetric(3);
  CHECK(is_normal(s3, center(s3)));
  const auto rot = generated_subgroup(s3, {first_of_order(s3, 3)});
  CHECK(is_normal(s3, rot));
  const auto t = generated_subgroup(s3, {first_of_order(s3, 2)});
  CHECK_FALSE(is_normal(s3, t));
  CHECK(normalizer(s3, t) == t);
  CHECK_THROWS_AS(is_normal(s3, ElementSet::of(6, {0, 1, 2})), Error);
}

TEST_CASE("commutator subgroup") {
  CHECK(commutator_subgroup(cyclic(12)).size() == 1);
  const auto q8 = dicyclic(8);
  CHECK(commutator_subgroup(q8) == center(q8));
  const auto s3 = symmetric(3);
  CHECK(commutator_subgroup(s3) == generated_subgroup(s3, {first_of_order(s3, 3)}));
}

TEST_CASE("subgroup lattice") {
  CHECK(subgroup_lattice(cyclic(7)).subgroups.size() == 2);
  CHECK(subgroup_lattice(dicyclic(8)).subgroups.size() == 6);
  CHECK(subgroup_lattice(symmetric(3)).subgroups.size() == 6);
  CHECK(subgroup_lattice(symmetric(4)).subgroups.size() == 30);
  CHECK(subgroup_lattice(alternating(5)).subgroups.size() == 59);
  for (const auto& g : {symmetric(3), dicyclic(8), dihedral(8), elementary_abelian(2, 3), dicyclic(12), dihedral(14),
                        direct_product(cyclic(2), cyclic(6))}) {
    CHECK(as_sets(subgroup_lattice(g).subgroups) == oracle::all_subgroups(testutil::to_table(g)));
  }
  const auto lat = subgroup_lattice(symmetric(3), true);
  // trivial group covered by 4 minimal subgroups; whole group covers the 4 maximal ones
  CHECK(lat.covers.size() == 8);
  CHECK_THROWS_AS(subgroup_lattice(cyclic(300)), Error);
}

TEST_CASE("maximal subgroups and Frattini subgroup") {
  CHECK(frattini(cyclic(7)).size() == 1);
  const auto q8 = dicyclic(8);
  CHECK(frattini(q8) == center(q8));
  CHECK(maximal_subgroups(q8).size() == 3);
  const auto c = direct_product(cyclic(4), cyclic(2));
  const auto phi = frattini(c);
  CHECK(phi.size() == 2);
  CHECK(phi == generated_subgroup(c, {power(c, 2, 2)}));
  CHECK(maximal_subgroups(symmetric(3)).size() == 4);
}

TEST_CASE("Sylow subgroups") {
  const auto c6 = cyclic(6);
  CHECK(sylow(c6, 3) == ElementSet::of(6, {0, 2, 4}));
  const auto s4 = symmetric(4);
  const auto p = sylow(s4, 2);
  CHECK(p.size() == 8);
  CHECK(are_isomorphic(subgroup_as_group(s4, p), dihedral(8)));
  for (std::size_t q : {3, 5, 7, 11}) {
    const auto d = dihedral(2 * q);
    CHECK(is_normal(d, sylow(d, q)));
  }
  CHECK(sylow(s4, 5).size() == 1);
  CHECK(sylow_by_growth(s4, 2).size() == 8);
  CHECK(sylow_by_growth(symmetric(5), 2).size() == 8);
  CHECK(sylow_by_growth(cyclic(300), 5).size() == 25);
  CHECK(sylow(dihedral(400), 2).size() == 16);
  CHECK_THROWS_AS(sylow(s4, 4), Error);
}

TEST_CASE("subgroup_as_group") {
  const auto a5 = alternating(5);
  const auto whole = subgroup_as_group(a5, ElementSet::full(60));
  CHECK(census(whole) == census(a5));
  const auto s4 = symmetric(4);
  const auto p = sylow(s4, 2);
  const auto h = subgroup_as_group(s4, p);
  std::vector<std::size_t> a, b;
  for (auto e : p.elements()) a.push_back(element_order(s4, e));
  for (Elem e = 0; e < h.order(); ++e) b.push_back(element_order(h, e));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("isomorphism testing") {
  CHECK_FALSE(are_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  CHECK_FALSE(are_isomorphic(dihedral(8), dicyclic(8)));
  CHECK(are_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
  CHECK(are_isomorphic(symmetric(3), dihedral(6)));
  CHECK_FALSE(are_isomorphic(alternating(4), dihedral(12)));
  // two of the four presets coincide up to isomorphism
  CHECK(are_isomorphic(ext16(1, 1), ext16(-1, 1)));
  CHECK_FALSE(are_isomorphic(ext16(1, 1), ext16(-1, 0)));

  const auto a = direct_product(dicyclic(8), cyclic(3));
  const auto b = direct_product(cyclic(3), dicyclic(8));
  const auto m = find_isomorphism(a, b);
  REQUIRE(m.has_value());
  CHECK(is_homomorphism(a, b, *m));
  CHECK(is_bijective(*m));

  CHECK_THROWS_AS(are_isomorphic(cyclic(600), cyclic(600)), Error);
}

TEST_CASE("isomorphism agrees with the brute-force oracle for small orders") {
  const std::vector<Group> groups = {cyclic(8),  direct_product(cyclic(4), cyclic(2)), elementary_abelian(2, 3),
                                     dicyclic(8), dihedral(8), cyclic(12), direct_product(cyclic(2), cyclic(6)),
                                     alternating(4), dihedral(12), dicyclic(12)};
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = 0; j < groups.size(); ++j)
      if (groups[i].order() == groups[j].order())
        CHECK(are_isomorphic(groups[i], groups[j]) ==
              oracle::isomorphic(testutil::to_table(groups[i]), testutil::to_table(groups[j])));
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(dicyclic(8)).size() == 24);
  CHECK(automorphisms(dihedral(8)).size() == 8);
  CHECK(automorphisms(elementary_abelian(2, 3)).size() == 168);
  CHECK(automorphisms(cyclic(7)).size() == 6);
  const auto autos = automorphisms(symmetric(3));
  CHECK(autos.front() == identity_morphism(symmetric(3)));
  CHECK_THROWS_AS(automorphisms(cyclic(65)), Error);
}

TEST_CASE("minimal generating sets") {
  CHECK(minimal_generating_set(cyclic(10)).size() == 1);
  CHECK(minimal_generating_set(dicyclic(8)).size() == 2);
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto e = elementary_abelian(2, k);
    const auto gens = minimal_generating_set(e);
    CHECK(gens.size() == k);
    CHECK(generated_subgroup(e, gens).size() == e.order());
  }
  CHECK(minimal_generating_set(cyclic(1)).empty());
}
