#include "cycgrp/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cycgrp {

namespace {

// Tables up to this order get the exhaustive triple scan, which reports the
// lexicographically first violating triple.
constexpr std::size_t kFullAssociativityScan = 128;

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(a,b,c) = (" << a << "," << b << "," << c << ")";
  return os.str();
}

void check_associativity(const std::vector<Elem>& t, std::size_t n) {
  auto at = [&](std::size_t a, std::size_t b) { return std::size_t{t[a * n + b]}; };
  auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw Error(Errc::NotAssociative, "(a*b)*c != a*(b*c) for " + triple(a, b, c));
  };

  if (n <= kFullAssociativityScan) {
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b) {
        const auto ab = at(a, b);
        for (std::size_t c = 1; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c))) fail(a, b, c);
      }
    return;
  }

  // The elements g with (xy)g = x(yg) for all x, y are closed under the
  // product, so testing g over a set that generates the table under
  // multiplication covers every triple.
  std::vector<char> in_closure(n, 0);
  std::vector<std::size_t> closure;
  std::vector<std::size_t> gens;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (in_closure[cand]) continue;
    gens.push_back(cand);
    std::vector<std::size_t> queue{cand};
    in_closure[cand] = 1;
    closure.push_back(cand);
    while (!queue.empty()) {
      const auto y = queue.back();
      queue.pop_back();
      const std::size_t upto = closure.size();
      for (std::size_t i = 0; i < upto; ++i) {
        for (auto p : {at(y, closure[i]), at(closure[i], y)}) {
          if (!in_closure[p]) {
            in_closure[p] = 1;
            closure.push_back(p);
            queue.push_back(p);
          }
        }
      }
    }
  }
  for (auto g : gens)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (at(at(a, b), g) != at(a, at(b, g))) fail(a, b, g);
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NoIdentityAtZero: return "NoIdentityAtZero";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotCentral: return "NotCentral";
    case Errc::NotIsomorphism: return "NotIsomorphism";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotBijective: return "NotBijective";
    case Errc::GeneratorsDontGenerate: return "GeneratorsDontGenerate";
    case Errc::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownAtom: return "UnknownAtom";
    case Errc::BadArity: return "BadArity";
  }
  return "Unknown";
}

Group Group::with_label(std::string label) const {
  Group copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Group make_group(std::vector<Elem> flat, std::size_t n, std::string label) {
  if (n == 0) throw Error(Errc::NotSquare, "empty table");
  if (n > kMaxOrder)
    throw Error(Errc::CapExceeded, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  if (flat.size() != n * n) throw Error(Errc::NotSquare, "table has " + std::to_string(flat.size()) + " cells, expected n*n");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (flat[a * n + b] >= n)
        throw Error(Errc::NotClosed, "table[" + std::to_string(a) + "][" + std::to_string(b) + "] = " +
                                         std::to_string(flat[a * n + b]) + " is not an element");

  for (std::size_t a = 0; a < n; ++a) {
    if (flat[a] != a)
      throw Error(Errc::NoIdentityAtZero, "table[0][" + std::to_string(a) + "] != " + std::to_string(a));
    if (flat[a * n] != a)
      throw Error(Errc::NoIdentityAtZero, "table[" + std::to_string(a) + "][0] != " + std::to_string(a));
  }

  std::vector<std::size_t> seen(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = flat[a * n + b];
      if (seen[v] == a)
        throw Error(Errc::NotLatinSquare, "row " + std::to_string(a) + " repeats " + std::to_string(v));
      seen[v] = a;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      const auto v = flat[a * n + b];
      if (seen[v] == b)
        throw Error(Errc::NotLatinSquare, "column " + std::to_string(b) + " repeats " + std::to_string(v));
      seen[v] = b;
    }
  }

  std::vector<Elem> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto row = flat.begin() + static_cast<std::ptrdiff_t>(a * n);
    const auto b = static_cast<std::size_t>(std::find(row, row + static_cast<std::ptrdiff_t>(n), Elem{0}) - row);
    if (flat[b * n + a] != 0)
      throw Error(Errc::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
    inverse[a] = static_cast<Elem>(b);
  }

  check_associativity(flat, n);

  Group g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.inverse_ = std::move(inverse);
  g.label_ = std::move(label);
  g.orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    std::uint32_t k = 1;
    std::size_t x = a;
    while (x != 0) {
      x = g.table_[a * n + x];
      ++k;
    }
    g.orders_[a] = k;
  }
  return g;
}

Group make_group(const std::vector<std::vector<std::size_t>>& rows, std::string label) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::NotSquare, "empty table");
  if (n > kMaxOrder)
    throw Error(Errc::CapExceeded, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw Error(Errc::NotSquare, "row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) + " entries");
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n)
        throw Error(Errc::NotClosed, "table[" + std::to_string(a) + "][" + std::to_string(b) + "] = " +
                                         std::to_string(rows[a][b]) + " is not an element");
      flat.push_back(static_cast<Elem>(rows[a][b]));
    }
  }
  return make_group(std::move(flat), n, std::move(label));
}

Elem power(const Group& g, Elem a, std::int64_t k) {
  const auto ord = static_cast<std::int64_t>(g.element_order(a));
  k %= ord;
  if (k < 0) k += ord;
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t exponent(const Group& g) {
  std::size_t e = 1;
  for (std::size_t a = 0; a < g.order(); ++a) e = std::lcm(e, g.element_order(static_cast<Elem>(a)));
  return e;
}

Elem conjugate(const Group& g, Elem a, Elem by) { return g.mul(g.mul(g.inverse(by), a), by); }

bool is_abelian(const Group& g) {
  const auto n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) != g.mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

ElementSet generated_subgroup(const Group& g, std::span<const Elem> generators) {
  ElementSet out(g.order());
  std::vector<Elem> members{0};
  out.insert(0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem x = members[i];
    for (Elem s : generators) {
      const Elem y = g.mul(x, s);
      if (!out.contains(y)) {
        out.insert(y);
        members.push_back(y);
      }
    }
  }
  return out;
}

ElementSet generated_subgroup(const Group& g, std::initializer_list<Elem> generators) {
  return generated_subgroup(g, std::span<const Elem>(generators.begin(), generators.size()));
}

bool is_subgroup(const Group& g, const ElementSet& h) {
  if (h.owner_order() != g.order() || !h.contains(0)) return false;
  const auto members = h.elements();
  for (Elem a : members)
    for (Elem b : members)
      if (!h.contains(g.mul(a, b))) return false;
  return true;
}

void require_subgroup(const Group& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw Error(Errc::NotSubgroup, "element set is not a subgroup of " + g.label());
}

std::vector<Elem> small_generating_set(const Group& g, const ElementSet& h) {
  auto candidates = h.elements();
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  ElementSet current = generated_subgroup(g, gens);
  for (Elem c : candidates) {
    if (current.contains(c)) continue;
    gens.push_back(c);
    current = generated_subgroup(g, gens);
    if (current == h) break;
  }
  return gens;
}

std::vector<Elem> small_generating_set(const Group& g) { return small_generating_set(g, ElementSet::full(g.order())); }

}  // namespace cycgrp
