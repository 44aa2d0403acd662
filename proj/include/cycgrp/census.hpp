#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cycgrp/group.hpp"

namespace cycgrp {

/// Euler's totient by trial-division factorization.
std::size_t totient(std::size_t k);

/// Ascending (prime, exponent) pairs; empty for 1.
std::vector<std::pair<std::size_t, std::size_t>> prime_factorization(std::size_t n);

/// The distinct cyclic subgroups <x>, deduplicated by member set and sorted
/// canonically (size, then lexicographic members).
std::vector<ElementSet> cyclic_subgroups(const Group& g);

/// Cyclic-subgroup census of a group.
struct CyclicCensus {
  std::size_t group_order = 0;
  /// c[k] = number of cyclic subgroups of order k; only realized orders appear.
  std::map<std::size_t, std::size_t> c;
  /// Element orders, ascending.
  std::vector<std::size_t> pi_e;
  /// Prime divisors of the group order, ascending.
  std::vector<std::size_t> pi;
  /// pi_e minus pi minus {1}.
  std::vector<std::size_t> pi_c;
  std::size_t num_cyclic = 0;
  /// group_order - num_cyclic.
  std::int64_t delta = 0;

  /// sum_k c_k * phi(k) == group_order
  bool order_sum_identity() const;
  /// sum_k c_k * (phi(k) - 1) == delta
  bool deficiency_identity() const;

  bool operator==(const CyclicCensus&) const = default;
};

CyclicCensus census(const Group& g);

/// c_k; 0 when no element has order k.
std::size_t count_of_order(const Group& g, std::size_t k);

/// Abelian with exponent at most 2.
bool is_elementary_abelian_2(const Group& g);

}  // namespace cycgrp
