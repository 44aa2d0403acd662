#include "cycgrp/spec_parser.hpp"

#include <cctype>
#include <sstream>

#include "cycgrp/constructions.hpp"

namespace cycgrp {

namespace {

struct AtomInfo {
  const char* name;
  AtomKind kind;
  std::size_t arity;
};

constexpr AtomInfo kAtoms[] = {
    {"C", AtomKind::Cyclic, 1},
    {"D", AtomKind::Dihedral, 1},
    {"Q", AtomKind::Dicyclic, 1},
    {"S", AtomKind::Symmetric, 1},
    {"A", AtomKind::Alternating, 1},
    {"E", AtomKind::ElementaryAbelian, 2},
    {"ES", AtomKind::Extraspecial, 2},
    {"EXT16", AtomKind::Ext16, 2},
    {"PERM", AtomKind::Perm, 0},
};

const AtomInfo& info(AtomKind kind) {
  for (const auto& a : kAtoms)
    if (a.kind == kind) return a;
  return kAtoms[0];
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    auto spec = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(Errc::SyntaxError, pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupSpec expr() {
    auto left = term();
    while (peek('x')) {
      ++pos_;
      auto right = term();
      left = GroupSpec{SpecProduct{std::make_shared<const GroupSpec>(std::move(left)),
                                   std::make_shared<const GroupSpec>(std::move(right))}};
    }
    return left;
  }

  GroupSpec term() {
    if (peek('(')) {
      ++pos_;
      auto inner = expr();
      expect(')');
      return inner;
    }
    return GroupSpec{atom()};
  }

  std::int64_t integer() {
    skip_ws();
    const auto start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    const auto digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 9) {
      pos_ = digits;
      fail("integer too large");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  // A sign argument: "+", "-", or a signed integer.
  std::int64_t sign_or_integer() {
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const auto after = pos_ + 1;
      if (after >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[after]))) {
        const std::int64_t s = text_[pos_] == '+' ? 1 : -1;
        pos_ = after;
        return s;
      }
    }
    return integer();
  }

  std::vector<std::size_t> cycle() {
    expect('(');
    std::vector<std::size_t> points;
    while (!peek(')')) {
      if (!points.empty() && peek(',')) ++pos_;
      const auto at = pos_;
      const auto v = integer();
      if (v < 1) {
        pos_ = at;
        fail("cycle points are 1-based");
      }
      points.push_back(static_cast<std::size_t>(v));
    }
    ++pos_;
    return points;
  }

  SpecAtom atom() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isupper(static_cast<unsigned char>(text_[pos_])) ||
                                   (pos_ > start && std::isdigit(static_cast<unsigned char>(text_[pos_])))))
      ++pos_;
    if (pos_ == start) fail("expected a group name");
    const auto name = text_.substr(start, pos_ - start);
    const AtomInfo* found = nullptr;
    for (const auto& a : kAtoms)
      if (name == a.name) found = &a;
    if (found == nullptr) throw ParseError(Errc::UnknownAtom, start, "unknown group '" + std::string(name) + "'");

    SpecAtom atom;
    atom.kind = found->kind;
    expect('(');
    if (found->kind == AtomKind::Perm) {
      const auto at = pos_;
      const auto degree = integer();
      if (degree < 1) {
        pos_ = at;
        fail("degree must be positive");
      }
      atom.args.push_back(degree);
      expect(';');
      do {
        std::vector<std::vector<std::size_t>> gen;
        do gen.push_back(cycle());
        while (peek('('));
        atom.generators.push_back(std::move(gen));
        if (!peek(',')) break;
        ++pos_;
      } while (true);
      expect(')');
      return atom;
    }
    if (!peek(')')) {
      do {
        const bool signed_slot = atom.args.empty() && (found->kind == AtomKind::Extraspecial || found->kind == AtomKind::Ext16);
        atom.args.push_back(signed_slot ? sign_or_integer() : integer());
        if (!peek(',')) break;
        ++pos_;
      } while (true);
    }
    expect(')');
    if (atom.args.size() != found->arity)
      throw ParseError(Errc::BadArity, start,
                       std::string(found->name) + " takes " + std::to_string(found->arity) + " argument(s), got " +
                           std::to_string(atom.args.size()));
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(std::ostringstream& os, const GroupSpec& spec) {
  if (const auto* prod = std::get_if<SpecProduct>(&spec.node)) {
    print_into(os, *prod->left);
    os << 'x';
    const bool wrap = std::holds_alternative<SpecProduct>(prod->right->node);
    if (wrap) os << '(';
    print_into(os, *prod->right);
    if (wrap) os << ')';
    return;
  }
  const auto& atom = std::get<SpecAtom>(spec.node);
  os << info(atom.kind).name << '(';
  switch (atom.kind) {
    case AtomKind::Perm: {
      os << atom.args.at(0) << ';';
      for (std::size_t g = 0; g < atom.generators.size(); ++g) {
        if (g > 0) os << ',';
        for (const auto& cyc : atom.generators[g]) {
          os << '(';
          for (std::size_t i = 0; i < cyc.size(); ++i) os << (i > 0 ? "," : "") << cyc[i];
          os << ')';
        }
      }
      break;
    }
    case AtomKind::Extraspecial:
      os << (atom.args[0] > 0 ? "+" : "-") << ',' << atom.args[1];
      break;
    case AtomKind::Ext16:
      os << (atom.args[0] > 0 ? "+" : "") << atom.args[0] << ',' << atom.args[1];
      break;
    default:
      for (std::size_t i = 0; i < atom.args.size(); ++i) os << (i > 0 ? "," : "") << atom.args[i];
  }
  os << ')';
}

std::size_t positive(std::int64_t v, const char* what) {
  if (v < 1) throw Error(Errc::InvalidArgument, std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

Group realize_atom(const SpecAtom& atom, const RealizeOptions& options) {
  switch (atom.kind) {
    case AtomKind::Cyclic: return cyclic(positive(atom.args[0], "C order"));
    case AtomKind::Dihedral: {
      const auto n = positive(atom.args[0], "D order");
      return options.dihedral ? options.dihedral(n) : dihedral(n);
    }
    case AtomKind::Dicyclic: return dicyclic(positive(atom.args[0], "Q order"));
    case AtomKind::Symmetric: return symmetric(positive(atom.args[0], "S degree"));
    case AtomKind::Alternating: return alternating(positive(atom.args[0], "A degree"));
    case AtomKind::ElementaryAbelian:
      if (atom.args[1] < 0) throw Error(Errc::InvalidArgument, "E rank must be non-negative");
      return elementary_abelian(positive(atom.args[0], "E prime"), static_cast<std::size_t>(atom.args[1]));
    case AtomKind::Extraspecial:
      if (atom.args[0] != 1 && atom.args[0] != -1) throw Error(Errc::InvalidArgument, "ES sign must be + or -");
      return extraspecial(positive(atom.args[1], "ES order"),
                          atom.args[0] > 0 ? ExtraspecialSign::Plus : ExtraspecialSign::Minus);
    case AtomKind::Ext16: return ext16(static_cast<int>(atom.args[0]), static_cast<int>(atom.args[1]));
    case AtomKind::Perm: {
      const auto degree = positive(atom.args[0], "PERM degree");
      std::vector<Permutation> gens;
      for (const auto& g : atom.generators) gens.push_back(permutation_from_cycles(degree, g));
      return from_permutations(degree, gens);
    }
  }
  throw Error(Errc::InvalidArgument, "unhandled atom");
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string print_spec(const GroupSpec& spec) {
  std::ostringstream os;
  print_into(os, spec);
  return os.str();
}

Group realize(const GroupSpec& spec, const RealizeOptions& options) {
  if (const auto* prod = std::get_if<SpecProduct>(&spec.node)) {
    const Group left = realize(*prod->left, options);
    const Group right = realize(*prod->right, options);
    if (left.order() * right.order() > kMaxOrder)
      throw Error(Errc::CapExceeded, "product order " + std::to_string(left.order() * right.order()) + " exceeds " +
                                         std::to_string(kMaxOrder));
    return direct_product(left, right).with_label(print_spec(spec));
  }
  return realize_atom(std::get<SpecAtom>(spec.node), options).with_label(print_spec(spec));
}

Group build_group(std::string_view text, const RealizeOptions& options) { return realize(parse_spec(text), options); }

}  // namespace cycgrp
