#include "cycgrp/verify.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "cycgrp/census.hpp"
#include "cycgrp/constructions.hpp"
#include "cycgrp/corpus.hpp"
#include "cycgrp/enumeration.hpp"
#include "cycgrp/spec_parser.hpp"
#include "cycgrp/structure.hpp"

namespace cycgrp {

namespace {

// Number of groups of order 1..12 up to isomorphism.
constexpr std::size_t kKnownGroupCounts[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};

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

// Lazily computed data shared by several checks.
class Context {
 public:
  explicit Context(const VerifyOptions& options) : options_(options) {
    realize_.dihedral = options.dihedral;
  }

  Group dihedral(std::size_t n) const { return options_.dihedral ? options_.dihedral(n) : cycgrp::dihedral(n); }
  Group build(const std::string& spec) const { return build_group(spec, realize_); }

  const std::vector<CorpusEntry>& corpus() {
    if (!corpus_) {
      auto texts = options_.corpus.empty() ? default_corpus() : options_.corpus;
      std::vector<GroupSpec> specs;
      specs.reserve(texts.size());
      for (const auto& t : texts) specs.push_back(parse_spec(t));
      corpus_ = evaluate_corpus(specs, options_.threads, realize_);
    }
    return *corpus_;
  }

  const std::vector<IsoClassReport>& enumerated() {
    if (!enumerated_) {
      std::vector<IsoClassReport> reports;
      for (std::size_t n = 1; n <= options_.enumerate_max; ++n) reports.push_back(enumerate_groups(n));
      enumerated_ = std::move(reports);
    }
    return *enumerated_;
  }

 private:
  const VerifyOptions& options_;
  RealizeOptions realize_;
  std::optional<std::vector<CorpusEntry>> corpus_;
  std::optional<std::vector<IsoClassReport>> enumerated_;
};

struct Outcome {
  bool passed;
  std::string detail;
};

class Runner {
 public:
  void run(std::string name, std::string claim, const std::function<Outcome()>& body) {
    CheckResult r{std::move(name), std::move(claim), false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto o = body();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

Outcome expect_equal(const std::string& what, std::int64_t got, std::int64_t want) {
  return {got == want, what + " = " + std::to_string(got) + " (expected " + std::to_string(want) + ")"};
}

}  // namespace

std::vector<CheckResult> verify_claims(const VerifyOptions& options) {
  Context ctx(options);
  Runner runner;

  runner.run("totient-identities", "sum_k c_k phi(k) = |G| and sum_k c_k (phi(k)-1) = |G| - |C(G)|", [&]() -> Outcome {
    std::size_t checked = 0;
    for (const auto& e : ctx.corpus()) {
      if (!e.census.order_sum_identity() || !e.census.deficiency_identity())
        return {false, "identity fails for " + e.label};
      ++checked;
    }
    for (const auto& r : ctx.enumerated())
      for (const auto& g : r.representatives) {
        const auto c = census(g);
        if (!c.order_sum_identity() || !c.deficiency_identity()) return {false, "identity fails for " + g.label()};
        ++checked;
      }
    return {true, std::to_string(checked) + " groups"};
  });

  // Each deficiency-3 group is matched against C5, Q8 and the (possibly
  // overridden) D10. The literal two-group statement and the complete
  // three-group list are reported as separate checks.
  struct Deficiency3 {
    std::vector<std::string> labels;
    std::size_t c5 = 0, q8 = 0, d10 = 0, other = 0;
    std::string summary() const {
      std::string s;
      for (const auto& l : labels) s += (s.empty() ? "" : ", ") + l;
      return std::to_string(labels.size()) + " groups: " + s + " (C5 x" + std::to_string(c5) + ", Q8 x" +
             std::to_string(q8) + ", D10 x" + std::to_string(d10) + ", other x" + std::to_string(other) + ")";
    }
  };
  auto classify = [&](const std::vector<std::pair<std::string, const Group*>>& groups) {
    const auto c5 = cyclic(5), q8 = dicyclic(8), d10 = ctx.dihedral(10);
    Deficiency3 d;
    for (const auto& [label, g] : groups) {
      d.labels.push_back(label);
      if (are_isomorphic(*g, c5))
        ++d.c5;
      else if (are_isomorphic(*g, q8))
        ++d.q8;
      else if (are_isomorphic(*g, d10))
        ++d.d10;
      else
        ++d.other;
    }
    return d;
  };
  std::optional<Deficiency3> exhaustive, in_corpus;
  auto exhaustive_hits = [&]() -> const Deficiency3& {
    if (!exhaustive) {
      std::vector<std::pair<std::string, const Group*>> hits;
      for (const auto& r : ctx.enumerated())
        for (const auto& g : r.representatives)
          if (census(g).delta == 3) hits.emplace_back(g.label(), &g);
      exhaustive = classify(hits);
    }
    return *exhaustive;
  };
  auto corpus_hits = [&]() -> const Deficiency3& {
    if (!in_corpus) {
      std::vector<std::pair<std::string, const Group*>> hits;
      for (const auto& e : ctx.corpus())
        if (e.census.delta == 3) hits.emplace_back(e.label, &e.group);
      in_corpus = classify(hits);
    }
    return *in_corpus;
  };
  const auto bound = std::to_string(options.enumerate_max);

  runner.run("deficiency-three-exhaustive", "|G| <= " + bound + " and |C(G)| = |G| - 3 only for Q8 and D10",
             [&]() -> Outcome {
               const auto& d = exhaustive_hits();
               return {d.labels.size() == 2 && d.q8 == 1 && d.d10 == 1, d.summary()};
             });
  runner.run("deficiency-three-exhaustive-complete", "|G| <= " + bound + " and |C(G)| = |G| - 3 exactly for C5, Q8, D10",
             [&]() -> Outcome {
               const auto& d = exhaustive_hits();
               return {d.labels.size() == 3 && d.c5 == 1 && d.q8 == 1 && d.d10 == 1, d.summary()};
             });
  runner.run("deficiency-three-corpus", "every corpus group with |C(G)| = |G| - 3 is Q8 or D10", [&]() -> Outcome {
    const auto& d = corpus_hits();
    return {d.c5 == 0 && d.other == 0 && d.q8 > 0 && d.d10 > 0, d.summary()};
  });
  runner.run("deficiency-three-corpus-complete", "every corpus group with |C(G)| = |G| - 3 is C5, Q8 or D10",
             [&]() -> Outcome {
               const auto& d = corpus_hits();
               return {d.other == 0 && d.c5 > 0 && d.q8 > 0 && d.d10 > 0, d.summary()};
             });

  runner.run("dihedral-deficiency", "|D_2q| - |C(D_2q)| = q - 2 for primes 3 <= q <= 97", [&]() -> Outcome {
    std::size_t tested = 0;
    for (std::size_t q = 3; q <= 97; ++q) {
      if (!is_prime(q)) continue;
      const auto delta = census(ctx.dihedral(2 * q)).delta;
      if (delta != static_cast<std::int64_t>(q) - 2)
        return {false, "q = " + std::to_string(q) + ": deficiency " + std::to_string(delta)};
      ++tested;
    }
    return {true, std::to_string(tested) + " primes"};
  });

  runner.run("deficiency-C6", "|C6| - |C(C6)| = 2", [&] { return expect_equal("delta(C6)", census(cyclic(6)).delta, 2); });
  runner.run("deficiency-D12", "|D12| - |C(D12)| = 2",
             [&] { return expect_equal("delta(D12)", census(ctx.dihedral(12)).delta, 2); });
  runner.run("deficiency-S3", "|S3| - |C(S3)| = 1", [&] { return expect_equal("delta(S3)", census(symmetric(3)).delta, 1); });

  runner.run("c4-Q8", "c_4(Q8) = 3", [&] { return expect_equal("c_4(Q8)", count_of_order(dicyclic(8), 4), 3); });
  runner.run("c4-D8", "c_4(D8) = 1", [&] { return expect_equal("c_4(D8)", count_of_order(ctx.dihedral(8), 4), 1); });
  runner.run("c4-C4xC4", "c_4(C4 x C4) > 3", [&]() -> Outcome {
    const auto c4 = count_of_order(ctx.build("C(4)xC(4)"), 4);
    return {c4 > 3, "c_4 = " + std::to_string(c4)};
  });
  runner.run("c4-D8*D8", "c_4(D8 * D8) > 3", [&]() -> Outcome {
    const auto d8 = ctx.dihedral(8);
    const auto z = center(d8);
    if (z.size() != 2) return {false, "|Z(D8)| = " + std::to_string(z.size())};
    const auto g = central_product(d8, d8, z, z, Morphism{2, 2, {0, 1}});
    const auto c4 = count_of_order(g, 4);
    return {g.order() == 32 && c4 > 3, "order " + std::to_string(g.order()) + ", c_4 = " + std::to_string(c4)};
  });
  runner.run("c6-C2xC2xC3", "c_6(C2 x C2 x C3) = 3",
             [&] { return expect_equal("c_6", count_of_order(ctx.build("C(2)xC(2)xC(3)"), 6), 3); });
  runner.run("c4-ext16", "c_4 != 3 for all four (C4 x C2) x| C2 with x^u = x^(+-1), w^u in {w, wx^2}",
             [&]() -> Outcome {
               std::string detail;
               bool ok = true;
               for (int e : {1, -1})
                 for (int f : {0, 1}) {
                   const auto g = ext16(e, f);
                   const auto c4 = count_of_order(g, 4);
                   ok = ok && c4 != 3;
                   detail += (detail.empty() ? "" : ", ") + g.label() + ": " + std::to_string(c4);
                 }
               return {ok, detail};
             });
  runner.run("exponent-Q8", "exp(Q8) = 4", [&] { return expect_equal("exp(Q8)", exponent(dicyclic(8)), 4); });
  runner.run("center-Q8", "|Z(Q8)| = 2", [&] { return expect_equal("|Z(Q8)|", center(dicyclic(8)).size(), 2); });
  runner.run("frattini-Q8", "Phi(Q8) = Z(Q8)", [&]() -> Outcome {
    const auto q8 = dicyclic(8);
    const auto phi = frattini(q8);
    return {phi == center(q8), "|Phi(Q8)| = " + std::to_string(phi.size())};
  });

  runner.run("three-primes", "r >= 3 prime divisors implies |G| - |C(G)| > p_r", [&]() -> Outcome {
    std::size_t tested = 0;
    for (const auto& e : ctx.corpus()) {
      if (e.census.pi.size() < 3) continue;
      ++tested;
      const auto largest = static_cast<std::int64_t>(e.census.pi.back());
      if (e.census.delta <= largest)
        return {false, e.label + ": deficiency " + std::to_string(e.census.delta) + " <= " + std::to_string(largest)};
    }
    return {tested > 0, std::to_string(tested) + " groups with three or more prime divisors"};
  });

  runner.run("elementary-abelian-iff", "|C(G)| = |G| iff G is an elementary abelian 2-group", [&]() -> Outcome {
    std::size_t zero = 0;
    auto check = [&](const Group& g, std::int64_t delta) -> std::optional<std::string> {
      const bool ea = is_elementary_abelian_2(g);
      if ((delta == 0) != ea) return g.label() + ": deficiency " + std::to_string(delta);
      if (ea) ++zero;
      return std::nullopt;
    };
    for (const auto& e : ctx.corpus())
      if (auto bad = check(e.group, e.census.delta)) return {false, *bad};
    for (const auto& r : ctx.enumerated())
      for (const auto& g : r.representatives)
        if (auto bad = check(g, census(g).delta)) return {false, *bad};
    return {true, std::to_string(zero) + " elementary abelian 2-groups, both directions hold"};
  });

  runner.run("enumeration-counts", "number of groups of order 1..12 is 1,1,1,2,1,2,1,5,2,2,1,5", [&]() -> Outcome {
    std::string got;
    bool ok = true;
    for (const auto& r : ctx.enumerated()) {
      got += (got.empty() ? "" : ",") + std::to_string(r.count);
      if (r.order <= 12 && r.count != kKnownGroupCounts[r.order - 1]) ok = false;
    }
    return {ok, "counts " + got};
  });

  runner.run("enumeration-pruning-sound", "symmetry pruning loses no class for orders <= 8", [&]() -> Outcome {
    EnumerationOptions off;
    off.symmetry_pruning = false;
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto pruned = enumerate_groups(n);
      const auto full = enumerate_groups(n, off);
      if (pruned.count != full.count) return {false, "order " + std::to_string(n) + " differs"};
      for (std::size_t k = 0; k < pruned.count; ++k)
        if (!are_isomorphic(pruned.representatives[k], full.representatives[k]))
          return {false, "order " + std::to_string(n) + " class " + std::to_string(k + 1) + " differs"};
    }
    return {true, "orders 1..8 agree"};
  });

  runner.run("sylow-orders", "|Sylow_p(G)| is the p-part of |G| for corpus groups of order <= 256", [&]() -> Outcome {
    const auto& corpus = ctx.corpus();
    std::vector<std::string> failures(corpus.size());
    parallel_for(corpus.size(), options.threads, [&](std::size_t i) {
      const auto& g = corpus[i].group;
      if (g.order() > kLatticeCap) return;
      for (auto p : corpus[i].census.pi)
        if (sylow(g, p).size() != p_part(g.order(), p)) failures[i] = corpus[i].label + " at p = " + std::to_string(p);
    });
    for (const auto& f : failures)
      if (!f.empty()) return {false, f};
    return {true, std::to_string(corpus.size()) + " groups"};
  });

  runner.run("frattini-C4xC2", "|Phi(C4 x C2)| = 2",
             [&] { return expect_equal("|Phi|", frattini(ctx.build("C(4)xC(2)")).size(), 2); });
  runner.run("quotient-C4xC2", "(C4 x C2) / <x> has exponent <= 2", [&]() -> Outcome {
    const auto c = ctx.build("C(4)xC(2)");
    const Elem x = 2;  // (1, 0)
    const auto q = quotient(c, generated_subgroup(c, {x}));
    const auto e = exponent(q);
    return {e <= 2, "order " + std::to_string(q.order()) + ", exponent " + std::to_string(e)};
  });

  return runner.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string format_results_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << "  [" << r.claim << "]  " << r.detail << "\n";
  }
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

nlohmann::json results_to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    checks.push_back({{"name", r.name}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  return {{"checks", checks}, {"passed", passed}, {"total", results.size()}, {"all_passed", passed == results.size()}};
}

}  // namespace cycgrp
