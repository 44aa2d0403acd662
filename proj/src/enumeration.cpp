#include "cycgrp/enumeration.hpp"

#include <algorithm>

#include "cycgrp/census.hpp"
#include "cycgrp/constructions.hpp"
#include "cycgrp/structure.hpp"

namespace cycgrp {

namespace {

class TableSearch {
 public:
  TableSearch(std::size_t n, bool symmetry_pruning)
      : n_(n),
        pruning_(symmetry_pruning),
        table_(n * n, -1),
        col_of_(n * n, -1),
        row_of_(n * n, -1),
        row_mask_(n, 0),
        col_mask_(n, 0),
        usage_(n, 0) {
    for (std::size_t a = 0; a < n; ++a) {
      place(0, a, a);
      if (a != 0) place(a, 0, a);
    }
    // The identity row and column are fixed by every relabeling, so they do
    // not count as uses of a label.
    std::fill(usage_.begin(), usage_.end(), 0);
    usage_[0] = 1;
    trail_.clear();
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) cells_.emplace_back(i, j);
  }

  IsoClassReport run() {
    descend(0);
    std::stable_sort(kept_.begin(), kept_.end(),
                     [](const Kept& a, const Kept& b) { return a.inv.key() < b.inv.key(); });
    IsoClassReport report;
    report.order = n_;
    for (auto& k : kept_) report.representatives.push_back(std::move(k.group));
    report.count = report.representatives.size();
    report.stats = stats_;
    return report;
  }

 private:
  static constexpr int kUnknown = -1;

  struct Kept {
    Group group;
    GroupInvariants inv;
  };

  int at(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }

  void place(std::size_t a, std::size_t b, std::size_t v) {
    table_[a * n_ + b] = static_cast<int>(v);
    col_of_[a * n_ + v] = static_cast<int>(b);
    row_of_[b * n_ + v] = static_cast<int>(a);
    row_mask_[a] |= 1U << v;
    col_mask_[b] |= 1U << v;
    ++usage_[a];
    ++usage_[b];
    ++usage_[v];
    trail_.push_back(a * n_ + b);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto cell = trail_.back();
      trail_.pop_back();
      const auto a = cell / n_, b = cell % n_;
      const auto v = static_cast<std::size_t>(table_[cell]);
      table_[cell] = kUnknown;
      col_of_[a * n_ + v] = kUnknown;
      row_of_[b * n_ + v] = kUnknown;
      row_mask_[a] &= ~(1U << v);
      col_mask_[b] &= ~(1U << v);
      --usage_[a];
      --usage_[b];
      --usage_[v];
    }
  }

  // Sets a*b = v unless that contradicts a known cell or the Latin property.
  bool assign(int a, int b, int v) {
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    const int known = at(ua, ub);
    if (known != kUnknown) return known == v;
    if ((row_mask_[ua] | col_mask_[ub]) & (1U << v)) return false;
    place(ua, ub, static_cast<std::size_t>(v));
    return true;
  }

  // Closes the trail under associativity: whenever three of the four
  // products in (pq)r = p(qr) are known, the fourth is deduced.
  bool propagate(std::size_t from) {
    for (std::size_t k = from; k < trail_.size(); ++k) {
      const auto cell = trail_[k];
      const int a = static_cast<int>(cell / n_), b = static_cast<int>(cell % n_);
      const int v = table_[cell];
      for (int x = 0; x < static_cast<int>(n_); ++x) {
        // (a b) x = a (b x)
        {
          const int bx = at(b, x), vx = at(v, x);
          if (bx != kUnknown) {
            const int abx = at(a, bx);
            if (abx != kUnknown) {
              if (!assign(v, x, abx)) return false;
            } else if (vx != kUnknown) {
              if (!assign(a, bx, vx)) return false;
            }
          } else if (vx != kUnknown) {
            const int s = col_of_[a * n_ + vx];
            if (s != kUnknown && !assign(b, x, s)) return false;
          }
        }
        // (x q) b = x (q b) where x q = a
        {
          const int q = col_of_[x * n_ + a];
          if (q != kUnknown) {
            const int qb = at(q, b);
            if (qb != kUnknown) {
              if (!assign(x, qb, v)) return false;
            } else {
              const int s = col_of_[x * n_ + v];
              if (s != kUnknown && !assign(q, b, s)) return false;
            }
          }
        }
        // (x a) b = x (a b)
        {
          const int xa = at(x, a), xv = at(x, v);
          if (xa != kUnknown) {
            const int xab = at(xa, b);
            if (xab != kUnknown) {
              if (!assign(x, v, xab)) return false;
            } else if (xv != kUnknown) {
              if (!assign(xa, b, xv)) return false;
            }
          } else if (xv != kUnknown) {
            const int s = row_of_[b * n_ + xv];
            if (s != kUnknown && !assign(x, a, s)) return false;
          }
        }
        // (a x) r = a (x r) where x r = b
        {
          const int r = col_of_[x * n_ + b];
          if (r != kUnknown) {
            const int ax = at(a, x);
            if (ax != kUnknown) {
              if (!assign(ax, r, v)) return false;
            } else {
              const int s = row_of_[r * n_ + v];
              if (s != kUnknown && !assign(a, x, s)) return false;
            }
          }
        }
      }
    }
    return true;
  }

  void descend(std::size_t cell) {
    while (cell < cells_.size() && at(cells_[cell].first, cells_[cell].second) != kUnknown) ++cell;
    if (cell == cells_.size()) {
      complete();
      return;
    }
    ++stats_.nodes;
    if (pruning_ && exceeds_first_order()) return;
    const auto [i, j] = cells_[cell];
    ++usage_[i];
    ++usage_[j];
    std::size_t least_unused = n_;
    for (std::size_t v = 0; v < n_; ++v)
      if (usage_[v] == 0) {
        least_unused = v;
        break;
      }
    const std::uint32_t blocked = row_mask_[i] | col_mask_[j];
    for (std::size_t v = 0; v < n_; ++v) {
      if (blocked & (1U << v)) continue;
      // Labels not yet used anywhere are interchangeable; the least one suffices.
      if (pruning_ && usage_[v] == 0 && v != least_unused) continue;
      const auto mark = trail_.size();
      place(i, j, v);
      if (propagate(mark)) descend(cell + 1);
      undo_to(mark);
    }
    --usage_[i];
    --usage_[j];
  }

  // Order of a, or 0 while the powers of a are not all known yet. Powers of a
  // only need row a: a^(k+1) = a * a^k.
  std::size_t known_order(std::size_t a, std::size_t limit) const {
    std::size_t x = a;
    for (std::size_t k = 1; k <= limit; ++k) {
      if (x == 0) return k;
      const int next = at(a, x);
      if (next == kUnknown) return 0;
      x = static_cast<std::size_t>(next);
    }
    return limit + 1;
  }

  // Every group has a labeling in which element 1 has the largest order, and
  // swapping unused labels never moves label 1, so this restriction is
  // compatible with the least-unused-label rule.
  bool exceeds_first_order() const {
    const auto first = known_order(1, n_);
    if (first == 0) return false;
    for (std::size_t a = 2; a < n_; ++a)
      if (known_order(a, first) > first) return true;
    return false;
  }

  void complete() {
    ++stats_.tables_completed;
    std::vector<Elem> flat(table_.begin(), table_.end());
    Group g = make_group(std::move(flat), n_);
    auto inv = invariants(g);
    for (const auto& k : kept_) {
      if (!(k.inv == inv)) continue;
      if (are_isomorphic(k.group, g)) {
        ++stats_.iso_rejections;
        return;
      }
    }
    kept_.push_back({std::move(g), std::move(inv)});
  }

  std::size_t n_;
  bool pruning_;
  std::vector<int> table_;
  std::vector<int> col_of_;  // col_of_[a*n + v] = b with a*b = v
  std::vector<int> row_of_;  // row_of_[b*n + v] = a with a*b = v
  std::vector<std::uint32_t> row_mask_;
  std::vector<std::uint32_t> col_mask_;
  std::vector<std::size_t> usage_;
  std::vector<std::size_t> trail_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<Kept> kept_;
  SearchStats stats_;
};

}  // namespace

IsoClassReport enumerate_groups(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw Error(Errc::InvalidArgument, "group order must be positive");
  if (n > kEnumerationCap)
    throw Error(Errc::CapExceeded, "enumeration limited to order " + std::to_string(kEnumerationCap));
  if (n > kEnumerationDefaultMax && !options.allow_large)
    throw Error(Errc::CapExceeded, "orders above " + std::to_string(kEnumerationDefaultMax) + " need allow_large");
  auto report = TableSearch(n, options.symmetry_pruning).run();
  for (std::size_t k = 0; k < report.count; ++k)
    report.representatives[k] = report.representatives[k].with_label(class_name(report.representatives[k], k + 1));
  return report;
}

std::size_t count_groups(std::size_t n, const EnumerationOptions& options) {
  return enumerate_groups(n, options).count;
}

std::optional<std::string> identify(const Group& g) {
  const auto n = g.order();
  if (n > kIsomorphismCap) return std::nullopt;
  if (are_isomorphic(g, cyclic(n))) return "C(" + std::to_string(n) + ")";
  if (n >= 6 && n % 2 == 0 && are_isomorphic(g, dihedral(n))) return "D(" + std::to_string(n) + ")";
  if (n >= 8 && n % 4 == 0 && are_isomorphic(g, dicyclic(n))) return "Q(" + std::to_string(n) + ")";
  const auto factors = prime_factorization(n);
  if (factors.size() == 1 && factors[0].second >= 2) {
    const auto [p, k] = factors[0];
    if (are_isomorphic(g, elementary_abelian(p, k))) return "E(" + std::to_string(p) + "," + std::to_string(k) + ")";
  }
  if (n == 6 && are_isomorphic(g, symmetric(3))) return "S(3)";
  if (n == 12 && are_isomorphic(g, alternating(4))) return "A(4)";
  if (n == 16) {
    for (int e : {1, -1})
      for (int f : {0, 1}) {
        const auto candidate = ext16(e, f);
        if (are_isomorphic(g, candidate)) return candidate.label();
      }
  }
  return std::nullopt;
}

std::string class_name(const Group& g, std::size_t class_index) {
  if (auto name = identify(g)) return *name;
  return "UNKNOWN(order=" + std::to_string(g.order()) + ",#" + std::to_string(class_index) + ")";
}

std::vector<DeficiencyMatch> scan_deficiency(std::size_t min_order, std::size_t max_order, std::int64_t target_delta,
                                             const EnumerationOptions& options) {
  std::vector<DeficiencyMatch> matches;
  for (std::size_t n = std::max<std::size_t>(min_order, 1); n <= max_order; ++n) {
    const auto report = enumerate_groups(n, options);
    for (const auto& rep : report.representatives) {
      const auto delta = census(rep).delta;
      if (delta == target_delta) matches.push_back({n, rep.label(), delta, rep});
    }
  }
  return matches;
}

}  // namespace cycgrp
