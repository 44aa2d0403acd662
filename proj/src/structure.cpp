#include "cycgrp/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace cycgrp {

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

// Smallest-index generator of each cyclic subgroup, ascending.
std::vector<Elem> cyclic_representatives(const Group& g) {
  const auto n = g.order();
  std::vector<char> covered(n, 0);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (covered[x]) continue;
    const auto e = static_cast<Elem>(x);
    reps.push_back(e);
    const auto ord = g.element_order(e);
    Elem y = 0;
    for (std::size_t j = 0; j < ord; ++j) {
      if (std::gcd(j, ord) == 1) covered[y] = 1;
      y = g.mul(y, e);
    }
  }
  return reps;
}

std::vector<std::size_t> centralizer_sizes(const Group& g) {
  std::vector<std::size_t> sizes(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) sizes[x] = centralizer(g, static_cast<Elem>(x)).size();
  return sizes;
}

// Extends gens[i] -> images[i] (i < count) over <gens[0..count)> by walking
// the right Cayley graph. Fails on an inconsistent or non-injective map.
bool extend_partial(const Group& a, const Group& b, std::span<const Elem> gens, std::span<const Elem> images,
                    std::vector<int>& map, std::vector<char>& used) {
  std::fill(map.begin(), map.end(), -1);
  std::fill(used.begin(), used.end(), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<Elem> frontier{0};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Elem x = frontier[i];
    const auto mx = static_cast<Elem>(map[x]);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = a.mul(x, gens[k]);
      const Elem my = b.mul(mx, images[k]);
      if (map[y] == -1) {
        if (used[my]) return false;
        map[y] = my;
        used[my] = 1;
        frontier.push_back(y);
      } else if (map[y] != my) {
        return false;
      }
    }
  }
  return true;
}

// Backtracking over images of a generating set of `a`. `visit` is called
// with every isomorphism found and returns true to stop the search.
void search_isomorphisms(const Group& a, const Group& b, const std::function<bool(const Morphism&)>& visit) {
  const auto gens = small_generating_set(a);
  const auto ca = centralizer_sizes(a);
  const auto cb = centralizer_sizes(b);

  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t y = 0; y < b.order(); ++y)
      if (b.element_order(static_cast<Elem>(y)) == a.element_order(gens[j]) && cb[y] == ca[gens[j]])
        candidates[j].push_back(static_cast<Elem>(y));

  std::vector<Elem> images(gens.size());
  std::vector<int> map(a.order());
  std::vector<char> used(b.order());
  bool stop = false;

  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == gens.size()) {
      Morphism m{a.order(), b.order(), {}};
      m.images.reserve(a.order());
      for (int v : map) m.images.push_back(static_cast<Elem>(v));
      stop = visit(m);
      return;
    }
    for (Elem cand : candidates[depth]) {
      images[depth] = cand;
      const std::span<const Elem> g(gens.data(), depth + 1);
      const std::span<const Elem> im(images.data(), depth + 1);
      if (!extend_partial(a, b, g, im, map, used)) continue;
      descend(depth + 1);
      if (stop) return;
    }
  };

  if (a.order() == 1) {
    visit(Morphism{1, 1, {0}});
    return;
  }
  descend(0);
}

}  // namespace

Morphism identity_morphism(const Group& g) {
  Morphism m{g.order(), g.order(), std::vector<Elem>(g.order())};
  std::iota(m.images.begin(), m.images.end(), Elem{0});
  return m;
}

bool is_homomorphism(const Group& source, const Group& target, const Morphism& m) {
  if (m.source_order != source.order() || m.target_order != target.order() || m.images.size() != source.order())
    return false;
  for (Elem v : m.images)
    if (v >= target.order()) return false;
  for (std::size_t x = 0; x < source.order(); ++x)
    for (std::size_t y = 0; y < source.order(); ++y) {
      const auto ex = static_cast<Elem>(x);
      const auto ey = static_cast<Elem>(y);
      if (m.images[source.mul(ex, ey)] != target.mul(m.images[x], m.images[y])) return false;
    }
  return true;
}

bool is_bijective(const Morphism& m) {
  if (m.source_order != m.target_order) return false;
  std::vector<char> hit(m.target_order, 0);
  for (Elem v : m.images) {
    if (v >= m.target_order || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Morphism compose(const Morphism& first, const Morphism& second) {
  if (first.target_order != second.source_order)
    throw Error(Errc::InvalidArgument, "morphisms do not compose");
  Morphism m{first.source_order, second.target_order, std::vector<Elem>(first.source_order)};
  for (std::size_t x = 0; x < first.source_order; ++x) m.images[x] = second.images[first.images[x]];
  return m;
}

ElementSet center(const Group& g) {
  const auto gens = small_generating_set(g);
  ElementSet z(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Elem>(x);
    if (std::all_of(gens.begin(), gens.end(), [&](Elem s) { return g.mul(e, s) == g.mul(s, e); })) z.insert(e);
  }
  return z;
}

ElementSet centralizer(const Group& g, Elem x) {
  ElementSet c(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) {
    const auto e = static_cast<Elem>(y);
    if (g.mul(e, x) == g.mul(x, e)) c.insert(e);
  }
  return c;
}

bool is_normal(const Group& g, const ElementSet& h) {
  require_subgroup(g, h);
  const auto gens = small_generating_set(g);
  for (Elem x : h.elements())
    for (Elem s : gens)
      if (!h.contains(conjugate(g, x, s))) return false;
  return true;
}

ElementSet normalizer(const Group& g, const ElementSet& h) {
  require_subgroup(g, h);
  const auto hgens = small_generating_set(g, h);
  ElementSet out(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) {
    const auto e = static_cast<Elem>(y);
    if (std::all_of(hgens.begin(), hgens.end(), [&](Elem s) { return h.contains(conjugate(g, s, e)); }))
      out.insert(e);
  }
  return out;
}

ElementSet commutator_subgroup(const Group& g) {
  const auto n = g.order();
  std::vector<Elem> gens;
  ElementSet derived = generated_subgroup(g, gens);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ea = static_cast<Elem>(a);
    const auto ia = g.inverse(ea);
    for (std::size_t b = 0; b < n; ++b) {
      const auto eb = static_cast<Elem>(b);
      const Elem comm = g.mul(g.mul(ia, g.inverse(eb)), g.mul(ea, eb));
      if (!derived.contains(comm)) {
        gens.push_back(comm);
        derived = generated_subgroup(g, gens);
      }
    }
  }
  return derived;
}

SubgroupLattice subgroup_lattice(const Group& g, bool with_covers) {
  if (g.order() > kLatticeCap)
    throw Error(Errc::CapExceeded, "subgroup lattice limited to order " + std::to_string(kLatticeCap));

  const auto reps = cyclic_representatives(g);
  std::vector<ElementSet> sets;
  std::vector<std::vector<Elem>> gens;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  auto add = [&](ElementSet s, std::vector<Elem> gs) {
    if (index.emplace(s, sets.size()).second) {
      sets.push_back(std::move(s));
      gens.push_back(std::move(gs));
    }
  };

  add(ElementSet::of(g.order(), {0}), {});
  for (Elem r : reps)
    if (r != 0) add(generated_subgroup(g, {r}), {r});

  // Every subgroup is reached from {0} by a chain of joins with cyclic subgroups.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Elem r : reps) {
      if (sets[i].contains(r)) continue;
      auto gs = gens[i];
      gs.push_back(r);
      auto joined = generated_subgroup(g, gs);
      add(std::move(joined), std::move(gs));
    }
  }

  SubgroupLattice lattice;
  lattice.subgroups = std::move(sets);
  std::sort(lattice.subgroups.begin(), lattice.subgroups.end(), canonical_less);

  if (with_covers) {
    const auto& subs = lattice.subgroups;
    for (std::size_t j = 0; j < subs.size(); ++j) {
      std::vector<std::size_t> below;
      for (std::size_t i = 0; i < j; ++i)
        if (subs[i].size() < subs[j].size() && subs[i].is_subset_of(subs[j])) below.push_back(i);
      for (std::size_t i : below) {
        const bool covered = std::none_of(below.begin(), below.end(), [&](std::size_t k) {
          return k != i && subs[i].size() < subs[k].size() && subs[i].is_subset_of(subs[k]);
        });
        if (covered) lattice.covers.emplace_back(i, j);
      }
    }
  }
  return lattice;
}

std::vector<ElementSet> maximal_subgroups(const Group& g) {
  const auto lattice = subgroup_lattice(g);
  const auto& subs = lattice.subgroups;
  std::vector<ElementSet> maximal;
  const std::size_t proper = subs.size() - 1;  // last entry is G itself
  for (std::size_t i = 0; i < proper; ++i) {
    bool is_max = true;
    for (std::size_t j = i + 1; j < proper && is_max; ++j)
      if (subs[j].size() > subs[i].size() && subs[i].is_subset_of(subs[j])) is_max = false;
    if (is_max) maximal.push_back(subs[i]);
  }
  return maximal;
}

ElementSet frattini(const Group& g) {
  const auto maximal = maximal_subgroups(g);
  ElementSet phi = ElementSet::full(g.order());
  for (const auto& m : maximal) phi = phi & m;
  return phi;
}

ElementSet sylow_by_growth(const Group& g, std::size_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  const auto target = p_part(g.order(), p);
  std::vector<Elem> gens;
  ElementSet sub = generated_subgroup(g, gens);
  while (sub.size() < target) {
    const auto norm = normalizer(g, sub);
    bool grown = false;
    for (Elem x : norm.elements()) {
      if (sub.contains(x) || !sub.contains(power(g, x, static_cast<std::int64_t>(p)))) continue;
      gens.push_back(x);
      sub = generated_subgroup(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw Error(Errc::InvalidArgument, "Sylow growth stalled; group table is inconsistent");
  }
  return sub;
}

ElementSet sylow(const Group& g, std::size_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  const auto target = p_part(g.order(), p);
  if (target == 1) return ElementSet::of(g.order(), {0});
  if (g.order() > kLatticeCap) return sylow_by_growth(g, p);
  const auto lattice = subgroup_lattice(g);
  for (const auto& s : lattice.subgroups)
    if (s.size() == target) return s;
  throw Error(Errc::InvalidArgument, "no Sylow subgroup found; group table is inconsistent");
}

Group subgroup_as_group(const Group& g, const ElementSet& h, std::string label) {
  require_subgroup(g, h);
  const auto members = h.elements();
  const auto m = members.size();
  std::vector<Elem> position(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) position[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = position[g.mul(members[i], members[j])];
  return make_group(std::move(flat), m, std::move(label));
}

std::vector<std::size_t> GroupInvariants::key() const {
  std::vector<std::size_t> k{order, abelian ? 0U : 1U, center_size, derived_size};
  k.insert(k.end(), spectrum.begin() + 1, spectrum.end());
  return k;
}

GroupInvariants invariants(const Group& g) {
  GroupInvariants inv;
  inv.order = g.order();
  inv.abelian = is_abelian(g);
  inv.spectrum.assign(g.order() + 1, 0);
  for (std::size_t x = 0; x < g.order(); ++x) ++inv.spectrum[g.element_order(static_cast<Elem>(x))];
  inv.center_size = inv.abelian ? g.order() : center(g).size();
  inv.derived_size = inv.abelian ? 1 : commutator_subgroup(g).size();
  return inv;
}

std::optional<Morphism> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() > kIsomorphismCap || b.order() > kIsomorphismCap)
    throw Error(Errc::CapExceeded, "isomorphism test limited to order " + std::to_string(kIsomorphismCap));
  if (a.order() != b.order()) return std::nullopt;
  if (!(invariants(a) == invariants(b))) return std::nullopt;
  std::optional<Morphism> found;
  search_isomorphisms(a, b, [&](const Morphism& m) {
    found = m;
    return true;
  });
  return found;
}

bool are_isomorphic(const Group& a, const Group& b) { return find_isomorphism(a, b).has_value(); }

std::vector<Morphism> automorphisms(const Group& g) {
  if (g.order() > kAutomorphismCap)
    throw Error(Errc::CapExceeded, "automorphism enumeration limited to order " + std::to_string(kAutomorphismCap));
  std::vector<Morphism> all;
  search_isomorphisms(g, g, [&](const Morphism& m) {
    all.push_back(m);
    return false;
  });
  std::sort(all.begin(), all.end(), [](const Morphism& x, const Morphism& y) { return x.images < y.images; });
  return all;
}

std::vector<Elem> minimal_generating_set(const Group& g) {
  if (g.order() == 1) return {};
  std::vector<Elem> reps = cyclic_representatives(g);
  reps.erase(reps.begin());  // drop the identity
  const auto full = g.order();

  std::vector<Elem> chosen;
  std::function<bool(std::size_t, std::size_t, const ElementSet&)> pick =
      [&](std::size_t start, std::size_t remaining, const ElementSet& current) -> bool {
    if (remaining == 0) return current.size() == full;
    for (std::size_t i = start; i + remaining <= reps.size(); ++i) {
      if (current.contains(reps[i])) continue;
      chosen.push_back(reps[i]);
      const auto next = generated_subgroup(g, chosen);
      if (pick(i + 1, remaining - 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t k = 1;; ++k) {
    chosen.clear();
    if (pick(0, k, ElementSet::of(full, {0}))) return chosen;
  }
}

}  // namespace cycgrp
