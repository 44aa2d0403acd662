#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cycgrp/group.hpp"
#include "cycgrp/morphism.hpp"

namespace cycgrp {

/// Largest group whose full subgroup lattice will be built.
inline constexpr std::size_t kLatticeCap = 256;
/// Largest order accepted by the isomorphism search.
inline constexpr std::size_t kIsomorphismCap = 512;
/// Largest order for exhaustive automorphism enumeration.
inline constexpr std::size_t kAutomorphismCap = 64;

struct SubgroupLattice {
  /// All subgroups in canonical order (size, then lexicographic members).
  std::vector<ElementSet> subgroups;
  /// Covering relation: (i, j) when subgroups[i] is maximal in subgroups[j].
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

ElementSet center(const Group& g);
ElementSet centralizer(const Group& g, Elem x);

/// Throws NotSubgroup if h is not a subgroup.
bool is_normal(const Group& g, const ElementSet& h);
ElementSet normalizer(const Group& g, const ElementSet& h);

ElementSet commutator_subgroup(const Group& g);

/// Every subgroup of g, found by closing the cyclic subgroups under joins.
/// Throws CapExceeded above kLatticeCap.
SubgroupLattice subgroup_lattice(const Group& g, bool with_covers = false);

/// Proper subgroups not contained in a larger proper subgroup.
std::vector<ElementSet> maximal_subgroups(const Group& g);

/// Intersection of the maximal subgroups ({0} for the trivial group).
ElementSet frattini(const Group& g);

/// A Sylow p-subgroup. Within the lattice cap this is the first subgroup of
/// full p-power order in canonical order; above it, sylow_by_growth.
/// Returns {0} when p does not divide |G|; throws InvalidArgument if p is
/// not prime.
ElementSet sylow(const Group& g, std::size_t p);

/// Sylow p-subgroup grown from {0}: while P is short of the p-part, adjoin
/// the lowest-index x in N(P) \ P with x^p in P.
ElementSet sylow_by_growth(const Group& g, std::size_t p);

/// Re-indexed table of h; elements keep ascending original order, so the
/// identity stays at 0.
Group subgroup_as_group(const Group& g, const ElementSet& h, std::string label = {});

/// Isomorphism invariants used to reject candidate pairs early.
struct GroupInvariants {
  std::size_t order = 0;
  bool abelian = false;
  /// spectrum[k] = number of elements of order k.
  std::vector<std::size_t> spectrum;
  std::size_t center_size = 0;
  std::size_t derived_size = 0;

  bool operator==(const GroupInvariants&) const = default;
  /// Flattened form used to sort isomorphism classes.
  std::vector<std::size_t> key() const;
};

GroupInvariants invariants(const Group& g);

/// An isomorphism a -> b, or nullopt. The witness maps a small generating set
/// of a; candidate images are tried in ascending index order.
std::optional<Morphism> find_isomorphism(const Group& a, const Group& b);
bool are_isomorphic(const Group& a, const Group& b);

/// Every automorphism of g (identity first). Capped at kAutomorphismCap.
std::vector<Morphism> automorphisms(const Group& g);

/// A generating set of minimum size, searched by increasing size; the first
/// set found in ascending index order over cyclic-subgroup representatives.
std::vector<Elem> minimal_generating_set(const Group& g);

}  // namespace cycgrp
