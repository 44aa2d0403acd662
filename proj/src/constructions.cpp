#include "cycgrp/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cycgrp/structure.hpp"

namespace cycgrp {

namespace {

void check_order(std::size_t n, const char* what) {
  if (n == 0) throw Error(Errc::InvalidArgument, std::string(what) + ": order must be positive");
  if (n > kMaxOrder)
    throw Error(Errc::CapExceeded,
                std::string(what) + ": order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string product_label(const Group& a, const Group& b) {
  if (a.label().empty() || b.label().empty()) return {};
  const bool wrap = b.label().find('x') != std::string::npos;
  return a.label() + "x" + (wrap ? "(" + b.label() + ")" : b.label());
}

// Table of a set of permutations closed under composition, given in a fixed
// order; product a*b applies a first.
Group permutation_table(const std::vector<Permutation>& perms, std::string label) {
  const auto n = perms.size();
  auto key = [](const Permutation& p) {
    std::uint64_t k = 0;
    for (auto v : p) k = (k << 4) | v;
    return k;
  };
  std::unordered_map<std::uint64_t, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(key(perms[i]), static_cast<Elem>(i));
  std::vector<Elem> flat(n * n);
  Permutation prod(perms.empty() ? 0 : perms[0].size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = perms[b][perms[a][x]];
      flat[a * n + b] = index.at(key(prod));
    }
  return make_group(std::move(flat), n, std::move(label));
}

std::vector<int> extend_images(const Group& source, const Group& target,
                               std::span<const std::pair<Elem, Elem>> generator_images) {
  for (const auto& [g, img] : generator_images)
    if (g >= source.order() || img >= target.order())
      throw Error(Errc::InvalidArgument, "generator image out of range");
  std::vector<int> map(source.order(), -1);
  map[0] = 0;
  std::vector<Elem> frontier{0};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Elem x = frontier[i];
    for (const auto& [g, img] : generator_images) {
      const Elem y = source.mul(x, g);
      if (map[y] != -1) continue;
      map[y] = target.mul(static_cast<Elem>(map[x]), img);
      frontier.push_back(y);
    }
  }
  if (frontier.size() != source.order())
    throw Error(Errc::GeneratorsDontGenerate, "generators reach only " + std::to_string(frontier.size()) + " of " +
                                                  std::to_string(source.order()) + " elements");
  return map;
}

Morphism to_morphism(const Group& source, const Group& target, const std::vector<int>& map) {
  Morphism m{source.order(), target.order(), {}};
  m.images.reserve(map.size());
  for (int v : map) m.images.push_back(static_cast<Elem>(v));
  return m;
}

}  // namespace

Group cyclic(std::size_t n) {
  check_order(n, "cyclic");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  return make_group(std::move(flat), n, "C(" + std::to_string(n) + ")");
}

Group dihedral(std::size_t two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw Error(Errc::InvalidArgument, "dihedral order must be even and >= 2, got " + std::to_string(two_n));
  check_order(two_n, "dihedral");
  const auto n = two_n / 2;
  std::vector<Elem> flat(two_n * two_n);
  // (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f+g)
  for (std::size_t x = 0; x < two_n; ++x)
    for (std::size_t y = 0; y < two_n; ++y) {
      const auto f = x / n, a = x % n;
      const auto g = y / n, b = y % n;
      const auto rot = f == 0 ? (a + b) % n : (a + n - b) % n;
      flat[x * two_n + y] = static_cast<Elem>(((f + g) % 2) * n + rot);
    }
  return make_group(std::move(flat), two_n, "D(" + std::to_string(two_n) + ")");
}

Group dicyclic(std::size_t four_n) {
  if (four_n < 8 || four_n % 4 != 0)
    throw Error(Errc::InvalidArgument, "dicyclic order must be a multiple of 4 and >= 8, got " + std::to_string(four_n));
  check_order(four_n, "dicyclic");
  const auto m = four_n / 2;  // order of a
  const auto n = four_n / 4;  // b^2 = a^n
  std::vector<Elem> flat(four_n * four_n);
  for (std::size_t x = 0; x < four_n; ++x)
    for (std::size_t y = 0; y < four_n; ++y) {
      const auto f = x / m, i = x % m;
      const auto g = y / m, j = y % m;
      std::size_t out;
      if (f == 0)
        out = g * m + (i + j) % m;
      else if (g == 0)
        out = m + (i + m - j) % m;
      else
        out = (i + m - j + n) % m;
      flat[x * four_n + y] = static_cast<Elem>(out);
    }
  return make_group(std::move(flat), four_n, "Q(" + std::to_string(four_n) + ")");
}

Group symmetric(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "symmetric degree must be positive");
  if (n > 6) throw Error(Errc::CapExceeded, "symmetric degree limited to 6");
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<Permutation> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return permutation_table(perms, "S(" + std::to_string(n) + ")");
}

Group alternating(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "alternating degree must be positive");
  if (n > 6) throw Error(Errc::CapExceeded, "alternating degree limited to 6");
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<Permutation> perms;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return permutation_table(perms, "A(" + std::to_string(n) + ")");
}

Group elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxOrder) throw Error(Errc::CapExceeded, "elementary abelian order exceeds cap");
  }
  Group acc = cyclic(1);
  const Group cp = cyclic(p);
  for (std::size_t i = 0; i < k; ++i) acc = i == 0 ? cp : direct_product(acc, cp);
  return acc.with_label("E(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

Group direct_product(const Group& a, const Group& b) {
  const auto na = a.order(), nb = b.order();
  check_order(na * nb, "direct_product");
  const auto n = na * nb;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto pa = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      const auto pb = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      flat[x * n + y] = static_cast<Elem>(pa * nb + pb);
    }
  return make_group(std::move(flat), n, product_label(a, b));
}

Morphism homomorphism_from_images(const Group& source, const Group& target,
                                  std::span<const std::pair<Elem, Elem>> generator_images) {
  const auto m = to_morphism(source, target, extend_images(source, target, generator_images));
  if (!is_homomorphism(source, target, m))
    throw Error(Errc::NotAHomomorphism, "generator images violate a relation of the source group");
  return m;
}

Morphism automorphism_from_images(const Group& a, std::span<const std::pair<Elem, Elem>> generator_images) {
  const auto m = to_morphism(a, a, extend_images(a, a, generator_images));
  if (!is_bijective(m)) throw Error(Errc::NotBijective, "extended map is not a bijection");
  if (!is_homomorphism(a, a, m))
    throw Error(Errc::NotAHomomorphism, "generator images violate a relation of the group");
  return m;
}

std::vector<Morphism> cyclic_action(const Morphism& phi, std::size_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "acting cyclic group must have positive order");
  std::vector<Morphism> powers;
  Morphism current{phi.source_order, phi.source_order, std::vector<Elem>(phi.source_order)};
  std::iota(current.images.begin(), current.images.end(), Elem{0});
  for (std::size_t k = 0; k < m; ++k) {
    powers.push_back(current);
    current = compose(current, phi);
  }
  if (current != powers.front())
    throw Error(Errc::ActionNotHomomorphism, "automorphism order does not divide " + std::to_string(m));
  return powers;
}

Group semidirect_product(const Group& a, const Group& b, std::span<const Morphism> action) {
  const auto na = a.order(), nb = b.order();
  if (action.size() != nb)
    throw Error(Errc::InvalidArgument, "action must give one automorphism per element of the acting group");
  check_order(na * nb, "semidirect_product");
  for (std::size_t k = 0; k < nb; ++k)
    if (!is_bijective(action[k]) || !is_homomorphism(a, a, action[k]))
      throw Error(Errc::ActionNotHomomorphism, "action[" + std::to_string(k) + "] is not an automorphism");
  for (std::size_t b1 = 0; b1 < nb; ++b1)
    for (std::size_t b2 = 0; b2 < nb; ++b2) {
      const auto& lhs = action[b.mul(static_cast<Elem>(b1), static_cast<Elem>(b2))];
      for (std::size_t x = 0; x < na; ++x)
        if (lhs.images[x] != action[b1].images[action[b2].images[x]])
          throw Error(Errc::ActionNotHomomorphism, "action[" + std::to_string(b1) + "*" + std::to_string(b2) +
                                                       "] != action[" + std::to_string(b1) + "] o action[" +
                                                       std::to_string(b2) + "]");
    }
  const auto n = na * nb;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a1 = static_cast<Elem>(x / nb), b1 = static_cast<Elem>(x % nb);
      const auto a2 = static_cast<Elem>(y / nb), b2 = static_cast<Elem>(y % nb);
      const auto pa = a.mul(a1, action[b1].images[a2]);
      flat[x * n + y] = static_cast<Elem>(pa * nb + b.mul(b1, b2));
    }
  return make_group(std::move(flat), n);
}

std::vector<Elem> coset_map(const Group& g, const ElementSet& normal) {
  require_subgroup(g, normal);
  if (!is_normal(g, normal)) throw Error(Errc::NotNormal, "subgroup is not normal in " + g.label());
  const auto members = normal.elements();
  std::vector<int> coset(g.order(), -1);
  int next = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] != -1) continue;
    for (Elem m : members) coset[g.mul(static_cast<Elem>(x), m)] = next;
    ++next;
  }
  return {coset.begin(), coset.end()};
}

Group quotient(const Group& g, const ElementSet& normal) {
  const auto coset = coset_map(g, normal);
  const auto k = g.order() / normal.size();
  std::vector<Elem> rep(k, 0);
  std::vector<char> seen(k, 0);
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!seen[coset[x]]) {
      seen[coset[x]] = 1;
      rep[coset[x]] = static_cast<Elem>(x);
    }
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = coset[g.mul(rep[i], rep[j])];
  return make_group(std::move(flat), k, g.label().empty() ? "" : g.label() + "/N");
}

Group central_product(const Group& a, const Group& b, const ElementSet& za, const ElementSet& zb,
                      const Morphism& ident) {
  require_subgroup(a, za);
  require_subgroup(b, zb);
  if (!za.is_subset_of(center(a))) throw Error(Errc::NotCentral, "first subgroup is not central");
  if (!zb.is_subset_of(center(b))) throw Error(Errc::NotCentral, "second subgroup is not central");
  const Group sa = subgroup_as_group(a, za);
  const Group sb = subgroup_as_group(b, zb);
  if (!is_bijective(ident) || !is_homomorphism(sa, sb, ident))
    throw Error(Errc::NotIsomorphism, "identification map is not an isomorphism of the central subgroups");

  const Group prod = direct_product(a, b);
  const auto za_elems = za.elements();
  const auto zb_elems = zb.elements();
  ElementSet anti(prod.order());
  for (std::size_t i = 0; i < za_elems.size(); ++i) {
    const Elem w = zb_elems[ident.images[i]];
    anti.insert(static_cast<Elem>(za_elems[i] * b.order() + b.inverse(w)));
  }
  const std::string label = a.label().empty() || b.label().empty() ? "" : a.label() + "*" + b.label();
  return quotient(prod, anti).with_label(label);
}

Group extraspecial(std::size_t order, ExtraspecialSign sign) {
  if (order != 8 && order != 32 && order != 128)
    throw Error(Errc::InvalidArgument, "extraspecial order must be 8, 32 or 128, got " + std::to_string(order));
  const Group d8 = dihedral(8);
  Group acc = sign == ExtraspecialSign::Minus ? dicyclic(8) : d8;
  const auto zd8 = center(d8);
  const Morphism swap_centers{2, 2, {0, 1}};
  while (acc.order() < order) acc = central_product(acc, d8, center(acc), zd8, swap_centers);
  return acc.with_label(std::string("ES(") + (sign == ExtraspecialSign::Plus ? "+" : "-") + "," +
                        std::to_string(order) + ")");
}

Group ext16(int e, int f) {
  if ((e != 1 && e != -1) || (f != 0 && f != 1))
    throw Error(Errc::InvalidArgument, "ext16 expects e in {+1,-1} and f in {0,1}");
  const Group base = direct_product(cyclic(4), cyclic(2));
  const Elem x = 2;  // (1,0)
  const Elem w = 1;  // (0,1)
  const std::pair<Elem, Elem> images[] = {
      {x, power(base, x, e)},
      {w, base.mul(w, power(base, x, 2 * f))},
  };
  const auto phi = automorphism_from_images(base, images);
  const auto action = cyclic_action(phi, 2);
  const Group g = semidirect_product(base, cyclic(2), action);
  return g.with_label(std::string("EXT16(") + (e > 0 ? "+1" : "-1") + "," + std::to_string(f) + ")");
}

Permutation permutation_from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  if (degree == 0 || degree > kMaxPermutationDegree)
    throw Error(Errc::InvalidArgument, "permutation degree must be in 1.." + std::to_string(kMaxPermutationDegree));
  Permutation p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<char> touched(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto pt = cycle[i];
      if (pt < 1 || pt > degree)
        throw Error(Errc::InvalidArgument, "point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      if (touched[pt - 1]) throw Error(Errc::InvalidArgument, "point " + std::to_string(pt) + " repeated in cycles");
      touched[pt - 1] = 1;
      p[pt - 1] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()] - 1);
    }
  }
  return p;
}

Group from_permutations(std::size_t degree, std::span<const Permutation> generators) {
  if (degree == 0 || degree > kMaxPermutationDegree)
    throw Error(Errc::InvalidArgument, "permutation degree must be in 1.." + std::to_string(kMaxPermutationDegree));
  for (const auto& s : generators) {
    std::vector<char> hit(degree, 0);
    if (s.size() != degree) throw Error(Errc::InvalidArgument, "generator has wrong degree");
    for (auto v : s) {
      if (v >= degree || hit[v]) throw Error(Errc::InvalidArgument, "generator is not a permutation");
      hit[v] = 1;
    }
  }

  auto key = [](const Permutation& p) {
    std::uint64_t k = 0;
    for (auto v : p) k = (k << 4) | v;
    return k;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::vector<Permutation> elems{id};
  std::vector<std::size_t> parent{0}, via{0};
  std::unordered_map<std::uint64_t, Elem> index{{key(id), 0}};
  const auto k = generators.size();
  std::vector<Elem> right;  // right[e*k + s] = e * generators[s]
  Permutation prod(degree);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t x = 0; x < degree; ++x) prod[x] = generators[s][elems[e][x]];
      auto [it, inserted] = index.emplace(key(prod), static_cast<Elem>(elems.size()));
      if (inserted) {
        if (elems.size() >= kMaxOrder)
          throw Error(Errc::CapExceeded, "permutation group order exceeds " + std::to_string(kMaxOrder));
        elems.push_back(prod);
        parent.push_back(e);
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const auto n = elems.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) flat[a * n + b] = right[flat[a * n + parent[b]] * k + via[b]];
  }
  return make_group(std::move(flat), n);
}

}  // namespace cycgrp
