#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycgrp/group.hpp"

namespace cycgrp {

/// Hard limit on the order accepted by enumerate_groups.
inline constexpr std::size_t kEnumerationCap = 16;
/// Orders above this need EnumerationOptions::allow_large.
inline constexpr std::size_t kEnumerationDefaultMax = 12;

struct EnumerationOptions {
  bool allow_large = false;
  /// Least-unused-label symmetry breaking. Turning it off is only useful for
  /// checking that the pruning loses no classes.
  bool symmetry_pruning = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t tables_completed = 0;
  std::uint64_t iso_rejections = 0;
};

/// One representative per isomorphism class of groups of a given order.
struct IsoClassReport {
  std::size_t order = 0;
  /// Sorted by GroupInvariants::key(), discovery order on ties.
  std::vector<Group> representatives;
  std::size_t count = 0;
  SearchStats stats;
};

/// Backtracking search over Cayley tables filled row-major with identity
/// row/column fixed; prunes on Latin-square constraints, every associativity
/// triple as soon as its four products are known, and (optionally) least-
/// unused-label symmetry. Completed tables isomorphic to a kept
/// representative are rejected.
IsoClassReport enumerate_groups(std::size_t n, const EnumerationOptions& options = {});

std::size_t count_groups(std::size_t n, const EnumerationOptions& options = {});

/// Name of the first construction isomorphic to g, tried in this order:
/// C(n), D(n) (n >= 6), Q(n), E(p,k) (k >= 2), S(3), A(4), EXT16(e,f).
std::optional<std::string> identify(const Group& g);

/// identify(g), or "UNKNOWN(order=n,#k)" with k the 1-based class index.
std::string class_name(const Group& g, std::size_t class_index);

struct DeficiencyMatch {
  std::size_t order = 0;
  std::string name;
  std::int64_t delta = 0;
  Group group;
};

/// Every isomorphism class of order in [min_order, max_order] whose
/// deficiency |G| - |C(G)| equals target_delta.
std::vector<DeficiencyMatch> scan_deficiency(std::size_t min_order, std::size_t max_order, std::int64_t target_delta,
                                             const EnumerationOptions& options = {});

}  // namespace cycgrp
