#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cycgrp/group.hpp"
#include "cycgrp/morphism.hpp"

namespace cycgrp {

/// Cyclic group of order n; element i is g^i, so the product is addition mod n.
Group cyclic(std::size_t n);

/// Dihedral group of order two_n. Element i < n is the rotation r^i and
/// element n + i is r^i s. dihedral(2) is C2 and dihedral(4) is C2 x C2.
Group dihedral(std::size_t two_n);

/// Dicyclic group <a, b | a^(2n), b^2 = a^n, a^b = a^-1> of order four_n >= 8.
/// Element i < 2n is a^i and element 2n + i is a^i b; dicyclic(8) is Q8.
Group dicyclic(std::size_t four_n);

/// All permutations of {0..n-1} in lexicographic order (identity first).
/// The product a*b applies a first, then b.
Group symmetric(std::size_t n);
/// Even permutations of {0..n-1}, lexicographic order.
Group alternating(std::size_t n);

/// (C_p)^k as an iterated direct product; k = 0 gives the trivial group.
Group elementary_abelian(std::size_t p, std::size_t k);

/// Pairs (a, b) at index a*|B| + b.
Group direct_product(const Group& a, const Group& b);

/// Extends generator images to an automorphism of a.
/// Errors: GeneratorsDontGenerate, NotBijective, NotAHomomorphism (checked in
/// that order).
Morphism automorphism_from_images(const Group& a, std::span<const std::pair<Elem, Elem>> generator_images);

/// Extends generator images to a homomorphism source -> target.
/// Errors: GeneratorsDontGenerate, NotAHomomorphism.
Morphism homomorphism_from_images(const Group& source, const Group& target,
                                  std::span<const std::pair<Elem, Elem>> generator_images);

/// Pairs (a, b) at index a*|B| + b with (a1,b1)(a2,b2) = (a1 * action[b1](a2), b1 b2).
/// action[b] must be an automorphism of a and b -> action[b] a homomorphism
/// B -> Aut(A), i.e. action[b1 b2] = action[b1] o action[b2].
Group semidirect_product(const Group& a, const Group& b, std::span<const Morphism> action);

/// Powers of a single automorphism, indexed like cyclic(m): entry k is phi^k.
/// Throws ActionNotHomomorphism unless phi^m is the identity.
std::vector<Morphism> cyclic_action(const Morphism& phi, std::size_t m);

/// Coset group G/N; cosets ordered by smallest member, so the identity coset is 0.
Group quotient(const Group& g, const ElementSet& normal);

/// Coset index of each element of g in quotient(g, normal).
std::vector<Elem> coset_map(const Group& g, const ElementSet& normal);

/// (A x B) / {(z, ident(z)^-1)}. ident maps subgroup_as_group(A, za) onto
/// subgroup_as_group(B, zb). Errors: NotSubgroup, NotCentral, NotIsomorphism.
Group central_product(const Group& a, const Group& b, const ElementSet& za, const ElementSet& zb,
                      const Morphism& ident);

enum class ExtraspecialSign { Plus, Minus };

/// Extraspecial 2-group of order 8, 32 or 128: D8 * ... * D8 for Plus, with
/// the first factor replaced by Q8 for Minus.
Group extraspecial(std::size_t order, ExtraspecialSign sign);

/// (C4 x C2) x| C2 where the C2 generator u acts by x^u = x^e, w^u = w x^(2f)
/// with x = (1,0), w = (0,1) in C4 x C2. e in {+1,-1}, f in {0,1}.
Group ext16(int e, int f);

/// Image-vector permutation on {0..degree-1}: perm[i] is the image of i.
using Permutation = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxPermutationDegree = 10;

/// Permutation from 1-based cycles, e.g. {{1,2,3},{4,5}}.
Permutation permutation_from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

/// Closure of the generators under composition (apply left factor first);
/// elements in breadth-first discovery order from the identity.
Group from_permutations(std::size_t degree, std::span<const Permutation> generators);

}  // namespace cycgrp
