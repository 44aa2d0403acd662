#include <doctest.h>

#include "cycgrp/census.hpp"
#include "cycgrp/constructions.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cycgrp;

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(8) == 4);
  for (std::size_t q : {5, 7, 11, 13, 97}) CHECK(totient(3 * q) == 2 * (q - 1));
  for (std::size_t k = 1; k <= 300; ++k) CHECK(totient(k) == oracle::gcd_totient(k));
}

TEST_CASE("prime_factorization") {
  using PF = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(prime_factorization(1).empty());
  CHECK(prime_factorization(60) == PF{{2, 2}, {3, 1}, {5, 1}});
  CHECK(prime_factorization(2 * 97) == PF{{2, 1}, {97, 1}});
  for (std::size_t n = 1; n <= 500; ++n) {
    std::size_t product = 1;
    for (auto [p, e] : prime_factorization(n))
      for (std::size_t i = 0; i < e; ++i) product *= p;
    CHECK(product == n);
  }
}

TEST_CASE("cyclic_subgroups") {
  CHECK(cyclic_subgroups(cyclic(1)).size() == 1);
  CHECK(cyclic_subgroups(dicyclic(8)).size() == 5);
  CHECK(cyclic_subgroups(dihedral(10)).size() == 7);
  const auto subs = cyclic_subgroups(symmetric(4));
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(canonical_less(subs[i - 1], subs[i]));
}

TEST_CASE("census values") {
  CHECK(census(cyclic(6)).delta == 2);
  CHECK(census(dihedral(12)).delta == 2);
  CHECK(census(dihedral(14)).delta == 5);
  CHECK(census(symmetric(3)).delta == 1);

  const auto q8 = census(dicyclic(8));
  CHECK(q8.group_order == 8);
  CHECK(q8.c == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 3}});
  CHECK(q8.pi_e == std::vector<std::size_t>{1, 2, 4});
  CHECK(q8.pi == std::vector<std::size_t>{2});
  CHECK(q8.pi_c == std::vector<std::size_t>{4});
  CHECK(q8.num_cyclic == 5);
  CHECK(q8.order_sum_identity());
  CHECK(q8.deficiency_identity());

  const auto c1 = census(cyclic(1));
  CHECK(c1.delta == 0);
  CHECK(c1.c == std::map<std::size_t, std::size_t>{{1, 1}});
  CHECK(c1.pi.empty());

  const auto c4 = census(cyclic(4));
  CHECK(c4.c == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 1}});
  CHECK(c4.delta == 1);
}

TEST_CASE("count_of_order") {
  CHECK(count_of_order(dicyclic(8), 4) == 3);
  CHECK(count_of_order(dihedral(8), 4) == 1);
  CHECK(count_of_order(direct_product(cyclic(4), cyclic(4)), 4) == 6);
  CHECK(count_of_order(cyclic(5), 3) == 0);
}

TEST_CASE("is_elementary_abelian_2") {
  CHECK(is_elementary_abelian_2(cyclic(1)));
  const auto v4 = direct_product(cyclic(2), cyclic(2));
  CHECK(is_elementary_abelian_2(v4));
  CHECK(census(v4).delta == 0);
  CHECK_FALSE(is_elementary_abelian_2(cyclic(4)));
  CHECK_FALSE(is_elementary_abelian_2(cyclic(3)));
  CHECK(is_elementary_abelian_2(elementary_abelian(2, 5)));
}

TEST_CASE("census agrees with subgroup counting by repeated multiplication") {
  for (const auto& g : {dicyclic(12), symmetric(4), alternating(5), dihedral(18), ext16(-1, 0),
                        direct_product(cyclic(6), cyclic(10))}) {
    CHECK(census(g).c == oracle::cyclic_counts(testutil::to_table(g)));
  }
}
