#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cycgrp/group.hpp"

namespace cycgrp {

/// Group-expression language:
///
///   expr := term ("x" term)*          left-associative direct product
///   term := atom | "(" expr ")"
///   atom := NAME "(" args ")"
///
/// Atoms: C(n) D(n) Q(n) S(n) A(n) E(p,k) ES(+|-,n) EXT16(+1|-1,0|1)
/// and PERM(degree; gen, gen, ...) where each generator is a product of
/// 1-based cycles, e.g. PERM(5; (1 2 3 4 5), (2 5)(3 4)).
enum class AtomKind { Cyclic, Dihedral, Dicyclic, Symmetric, Alternating, ElementaryAbelian, Extraspecial, Ext16, Perm };

struct GroupSpec;

struct SpecAtom {
  AtomKind kind = AtomKind::Cyclic;
  /// Integer arguments; the extraspecial sign and the EXT16 exponent are +1/-1.
  std::vector<std::int64_t> args;
  /// PERM only: each generator is a list of 1-based cycles.
  std::vector<std::vector<std::vector<std::size_t>>> generators;
};

struct SpecProduct {
  std::shared_ptr<const GroupSpec> left;
  std::shared_ptr<const GroupSpec> right;
};

struct GroupSpec {
  std::variant<SpecAtom, SpecProduct> node;
};

/// Throws ParseError with code SyntaxError, UnknownAtom or BadArity.
GroupSpec parse_spec(std::string_view text);

/// Canonical text: no whitespace, products left-nested with the right operand
/// parenthesized when it is itself a product.
std::string print_spec(const GroupSpec& spec);

struct RealizeOptions {
  /// Replaces the dihedral constructor (used to inject a faulty table).
  std::function<Group(std::size_t)> dihedral;
};

/// Builds the group; its label is print_spec(spec).
Group realize(const GroupSpec& spec, const RealizeOptions& options = {});

/// parse_spec then realize.
Group build_group(std::string_view text, const RealizeOptions& options = {});

}  // namespace cycgrp
