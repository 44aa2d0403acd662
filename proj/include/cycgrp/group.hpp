#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cycgrp/element_set.hpp"
#include "cycgrp/error.hpp"

namespace cycgrp {

/// Largest order accepted for a table group.
inline constexpr std::size_t kMaxOrder = 4096;

/// A finite group stored as a validated Cayley table.
///
/// Element 0 is always the identity and table(a, b) = a*b. Instances are
/// only produced by make_group (or by the library's own constructors, which
/// route through it), so every Group satisfies the identity, Latin square,
/// inverse and associativity invariants. A Group is immutable.
class Group {
 public:
  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Elem inverse(Elem a) const noexcept { return inverse_[a]; }
  std::size_t element_order(Elem a) const noexcept { return orders_[a]; }

  std::span<const Elem> row(Elem a) const noexcept { return {table_.data() + std::size_t{a} * n_, n_}; }
  std::span<const Elem> flat_table() const noexcept { return table_; }

  Group with_label(std::string label) const;

  friend Group make_group(std::vector<Elem> flat, std::size_t n, std::string label);

 private:
  Group() = default;

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::string label_;
};

/// Validate a row-major n*n table and wrap it as a Group.
///
/// Checks run in this order: entries in range (NotClosed), identity at
/// index 0 (NoIdentityAtZero), rows and columns are permutations
/// (NotLatinSquare), two-sided inverses (NoInverse), associativity
/// (NotAssociative). The message names the first violating element,
/// pair or triple.
Group make_group(std::vector<Elem> flat, std::size_t n, std::string label = {});

/// Same as above for a nested table; also rejects non-square input (NotSquare).
Group make_group(const std::vector<std::vector<std::size_t>>& rows, std::string label = {});

inline Elem mul(const Group& g, Elem a, Elem b) { return g.mul(a, b); }
inline std::size_t element_order(const Group& g, Elem a) { return g.element_order(a); }

/// a^k by square-and-multiply; negative k uses the inverse.
Elem power(const Group& g, Elem a, std::int64_t k);

/// lcm of all element orders.
std::size_t exponent(const Group& g);

/// g^-1 a g.
Elem conjugate(const Group& g, Elem a, Elem by);

bool is_abelian(const Group& g);

/// Smallest subgroup containing the generators (breadth-first closure).
ElementSet generated_subgroup(const Group& g, std::span<const Elem> generators);
ElementSet generated_subgroup(const Group& g, std::initializer_list<Elem> generators);

/// True iff h contains 0 and is closed under multiplication.
bool is_subgroup(const Group& g, const ElementSet& h);

/// Throws Errc::NotSubgroup unless is_subgroup holds.
void require_subgroup(const Group& g, const ElementSet& h);

/// Greedy generating set: repeatedly adds the not-yet-generated element of
/// largest order (lowest index on ties). At most log2 |G| elements.
std::vector<Elem> small_generating_set(const Group& g);

/// Generating set of a subgroup, chosen the same way as small_generating_set.
std::vector<Elem> small_generating_set(const Group& g, const ElementSet& h);

}  // namespace cycgrp
