#include "cycgrp/census.hpp"

#include <algorithm>
#include <set>

#include "cycgrp/structure.hpp"

namespace cycgrp {

std::vector<std::pair<std::size_t, std::size_t>> prime_factorization(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::size_t totient(std::size_t k) {
  std::size_t phi = k;
  for (const auto& [p, e] : prime_factorization(k)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<ElementSet> cyclic_subgroups(const Group& g) {
  std::vector<ElementSet> subs;
  subs.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) subs.push_back(generated_subgroup(g, {static_cast<Elem>(x)}));
  std::sort(subs.begin(), subs.end(), canonical_less);
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  return subs;
}

bool CyclicCensus::order_sum_identity() const {
  std::size_t sum = 0;
  for (const auto& [k, count] : c) sum += count * totient(k);
  return sum == group_order;
}

bool CyclicCensus::deficiency_identity() const {
  std::int64_t sum = 0;
  for (const auto& [k, count] : c) sum += static_cast<std::int64_t>(count * (totient(k) - 1));
  return sum == delta;
}

CyclicCensus census(const Group& g) {
  CyclicCensus out;
  out.group_order = g.order();
  for (const auto& s : cyclic_subgroups(g)) ++out.c[s.size()];
  for (const auto& [k, count] : out.c) {
    out.pi_e.push_back(k);
    out.num_cyclic += count;
  }
  for (const auto& [p, e] : prime_factorization(g.order())) out.pi.push_back(p);
  for (auto k : out.pi_e)
    if (k != 1 && !std::binary_search(out.pi.begin(), out.pi.end(), k)) out.pi_c.push_back(k);
  out.delta = static_cast<std::int64_t>(out.group_order) - static_cast<std::int64_t>(out.num_cyclic);
  return out;
}

std::size_t count_of_order(const Group& g, std::size_t k) {
  const auto c = census(g);
  const auto it = c.c.find(k);
  return it == c.c.end() ? 0 : it->second;
}

bool is_elementary_abelian_2(const Group& g) { return exponent(g) <= 2 && is_abelian(g); }

}  // namespace cycgrp
