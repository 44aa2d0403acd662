#include <doctest.h>

#include "cycgrp/constructions.hpp"
#include "cycgrp/element_set.hpp"
#include "cycgrp/error.hpp"
#include "cycgrp/group.hpp"

using namespace cycgrp;

namespace {

Errc make_error(const std::vector<std::vector<std::size_t>>& rows) {
  try {
    make_group(rows);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("table was accepted");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("make_group accepts small valid tables") {
  const auto trivial = make_group({{0}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.element_order(0) == 1);

  const auto c2 = make_group({{0, 1}, {1, 0}}, "C2");
  CHECK(c2.order() == 2);
  CHECK(c2.label() == "C2");
  CHECK(c2.inverse(1) == 1);
}

TEST_CASE("make_group rejects each kind of bad table") {
  CHECK(make_error({}) == Errc::NotSquare);
  CHECK(make_error({{0, 1}, {1}}) == Errc::NotSquare);
  CHECK(make_error({{0, 1}, {1, 2}}) == Errc::NotClosed);
  CHECK(make_error({{1, 0}, {0, 1}}) == Errc::NoIdentityAtZero);
  CHECK(make_error({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}) == Errc::NotLatinSquare);
  // Z3 with row 1 replaced by [1,0,2]: breaks the Latin property in column 2.
  const auto bad = make_error({{0, 1, 2}, {1, 0, 2}, {2, 0, 1}});
  CHECK((bad == Errc::NotLatinSquare || bad == Errc::NotAssociative));
}

TEST_CASE("make_group rejects a Latin square that is not associative") {
  // Loop of order 5 with identity 0 that is not a group.
  const std::vector<std::vector<std::size_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(make_error(loop) == Errc::NotAssociative);
}

TEST_CASE("error messages name the error kind") {
  try {
    make_group({{0, 1}, {1, 2}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("NotClosed", 0) == 0);
  }
}

TEST_CASE("multiplication and element orders") {
  const auto c4 = cyclic(4);
  CHECK(mul(c4, 1, 1) == 2);
  for (Elem a = 0; a < 4; ++a) CHECK(mul(c4, 0, a) == a);

  const auto d10 = dihedral(10);
  // rotations 0..4, reflections 5..9
  for (Elem r = 1; r < 5; ++r)
    for (Elem s = 5; s < 10; ++s) CHECK(mul(d10, r, s) >= 5);

  const auto c12 = cyclic(12);
  CHECK(element_order(c12, 2) == 6);
  CHECK(element_order(c12, 0) == 1);

  const auto q8 = dicyclic(8);
  std::size_t involutions = 0;
  for (Elem a = 0; a < 8; ++a)
    if (element_order(q8, a) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("power") {
  const auto c5 = cyclic(5);
  CHECK(power(c5, 1, 7) == 2);
  CHECK(power(c5, 3, 0) == 0);
  CHECK(power(c5, 2, -1) == c5.inverse(2));
  const auto s4 = symmetric(4);
  for (Elem a = 0; a < s4.order(); ++a) {
    CHECK(power(s4, a, 1) == a);
    CHECK(power(s4, a, static_cast<std::int64_t>(element_order(s4, a))) == 0);
    CHECK(power(s4, a, -3) == s4.inverse(power(s4, a, 3)));
  }
}

TEST_CASE("exponent") {
  CHECK(exponent(dicyclic(8)) == 4);
  CHECK(exponent(elementary_abelian(2, 4)) == 2);
  CHECK(exponent(symmetric(3)) == 6);
  CHECK(exponent(cyclic(1)) == 1);
}

TEST_CASE("generated_subgroup") {
  const auto q8 = dicyclic(8);
  CHECK(generated_subgroup(q8, {}).size() == 1);
  for (Elem a = 0; a < 8; ++a)
    if (element_order(q8, a) == 4) CHECK(generated_subgroup(q8, {a}).size() == 4);

  const auto s3 = symmetric(3);
  Elem transposition = 0, three_cycle = 0;
  for (Elem a = 0; a < 6; ++a) {
    if (element_order(s3, a) == 2) transposition = a;
    if (element_order(s3, a) == 3) three_cycle = a;
  }
  CHECK(generated_subgroup(s3, {transposition, three_cycle}).size() == 6);
  CHECK(generated_subgroup(s3, {transposition}).size() == 2);
}

TEST_CASE("conjugate") {
  const auto d10 = dihedral(10);
  for (Elem a = 0; a < 10; ++a) CHECK(conjugate(d10, a, 0) == a);
  for (Elem r = 1; r < 5; ++r)
    for (Elem s = 5; s < 10; ++s) CHECK(conjugate(d10, r, s) == d10.inverse(r));
  const auto c6 = cyclic(6);
  for (Elem a = 0; a < 6; ++a)
    for (Elem g = 0; g < 6; ++g) CHECK(conjugate(c6, a, g) == a);
}

TEST_CASE("subgroup predicates") {
  const auto c6 = cyclic(6);
  CHECK(is_subgroup(c6, ElementSet::of(6, {0, 2, 4})));
  CHECK_FALSE(is_subgroup(c6, ElementSet::of(6, {0, 1})));
  CHECK_FALSE(is_subgroup(c6, ElementSet::of(6, {2, 4})));
  CHECK_THROWS_AS(require_subgroup(c6, ElementSet::of(6, {0, 1})), Error);
  CHECK(is_abelian(c6));
  CHECK_FALSE(is_abelian(symmetric(3)));
}

TEST_CASE("small generating sets generate") {
  for (const auto& g : {cyclic(12), dicyclic(12), symmetric(4), elementary_abelian(2, 3), dihedral(16)}) {
    const auto gens = small_generating_set(g);
    CHECK(generated_subgroup(g, gens).size() == g.order());
  }
  CHECK(small_generating_set(cyclic(9)).size() == 1);
}

TEST_CASE("ElementSet ordering and algebra") {
  const auto a = ElementSet::of(8, {0, 2, 4, 6});
  const auto b = ElementSet::of(8, {0, 4});
  CHECK(b.is_subset_of(a));
  CHECK((a & b) == b);
  CHECK((a | b) == a);
  CHECK(a.size() == 4);
  CHECK(a.contains(6));
  CHECK_FALSE(a.contains(5));
  CHECK(canonical_less(b, a));
  CHECK(canonical_less(ElementSet::of(8, {0, 1}), ElementSet::of(8, {0, 2})));
  CHECK(a.hash() == ElementSet::of(8, {6, 4, 2, 0}).hash());
  CHECK(ElementSet::full(5).size() == 5);
}
