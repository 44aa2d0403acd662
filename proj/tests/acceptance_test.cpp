// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// blocking criterion fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cycgrp/census.hpp"
#include "cycgrp/constructions.hpp"
#include "cycgrp/corpus.hpp"
#include "cycgrp/enumeration.hpp"
#include "cycgrp/spec_parser.hpp"
#include "cycgrp/structure.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cycgrp;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_seconds, bool blocking,
               const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v{false, ""};
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    v.ok = false;
    v.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
  }
  if (!v.ok && blocking) ++failures;
  const char* tag = v.ok ? "[PASS]" : (blocking ? "[FAIL]" : "[INFO]");
  std::printf("%s %s %s: %s (%.2f s)\n", tag, id.c_str(), title.c_str(), v.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<CorpusEntry> shipped_corpus() {
  std::vector<GroupSpec> specs;
  for (const auto& s : default_corpus()) specs.push_back(parse_spec(s));
  return evaluate_corpus(specs, 4);
}

std::vector<Group> enumerated_to(std::size_t max) {
  std::vector<Group> out;
  for (std::size_t n = 1; n <= max; ++n)
    for (auto& g : enumerate_groups(n).representatives) out.push_back(std::move(g));
  return out;
}

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  for (; n % p == 0; n /= p) r *= p;
  return r;
}

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::pair<int, std::string> run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string describe(const std::vector<std::string>& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : ", ") + l;
  return "{" + s + "}";
}

}  // namespace

int main() {
  std::vector<CorpusEntry> corpus;
  std::vector<Group> small;

  criterion("AC1", "totient identities on corpus and enumeration <= 12", 10.0, true, [&]() -> Verdict {
    corpus = shipped_corpus();
    small = enumerated_to(12);
    for (const auto& e : corpus)
      if (!e.census.order_sum_identity() || !e.census.deficiency_identity()) return {false, "fails for " + e.label};
    for (const auto& g : small) {
      const auto c = census(g);
      if (!c.order_sum_identity() || !c.deficiency_identity()) return {false, "fails for " + g.label()};
    }
    return {true, std::to_string(corpus.size()) + " corpus groups, " + std::to_string(small.size()) + " classes"};
  });

  criterion("AC2", "deficiency 3 over all classes of order <= 12 is exactly Q8 and D10", 60.0, true, [&]() -> Verdict {
    std::vector<std::string> hits;
    bool q8 = false, d10 = false;
    for (const auto& g : enumerated_to(12)) {
      if (census(g).delta != 3) continue;
      hits.push_back(g.label());
      q8 = q8 || are_isomorphic(g, dicyclic(8));
      d10 = d10 || are_isomorphic(g, dihedral(10));
    }
    const bool ok = hits.size() == 2 && q8 && d10;
    std::string detail = "found " + describe(hits);
    if (!ok) detail += "; C5 has |C(G)| = 2 = |G| - 3, so the two-group list is incomplete";
    return {ok, detail};
  });

  criterion("AC3", "every corpus group with deficiency 3 is Q8 or D10", 60.0, true, [&]() -> Verdict {
    const auto q8 = dicyclic(8), d10 = dihedral(10);
    std::vector<std::string> hits, others;
    for (const auto& e : corpus) {
      if (e.census.delta != 3) continue;
      hits.push_back(e.label);
      if (!are_isomorphic(e.group, q8) && !are_isomorphic(e.group, d10)) others.push_back(e.label);
    }
    std::string detail = "found " + describe(hits);
    if (!others.empty()) detail += "; not Q8 or D10: " + describe(others);
    return {others.empty() && !hits.empty(), detail};
  });

  criterion("AC4", "two-prime deficiency values", 0, true, [&]() -> Verdict {
    for (std::size_t q = 3; q <= 97; ++q)
      if (is_prime(q) && census(dihedral(2 * q)).delta != static_cast<std::int64_t>(q) - 2)
        return {false, "D(" + std::to_string(2 * q) + ")"};
    const auto c6 = census(cyclic(6)).delta, d12 = census(dihedral(12)).delta, s3 = census(symmetric(3)).delta;
    return {c6 == 2 && d12 == 2 && s3 == 1, "delta(D2q) = q-2 for q <= 97; C6 " + std::to_string(c6) + ", D12 " +
                                                std::to_string(d12) + ", S3 " + std::to_string(s3)};
  });

  criterion("AC5", "2-group values", 0, true, [&]() -> Verdict {
    const auto q8 = dicyclic(8), d8 = dihedral(8);
    const auto z = center(d8);
    const auto dd = central_product(d8, d8, z, z, Morphism{2, 2, {0, 1}});
    const auto c4c4 = count_of_order(build_group("C(4)xC(4)"), 4);
    const auto c4dd = count_of_order(dd, 4);
    const auto c6 = count_of_order(build_group("C(2)xC(2)xC(3)"), 6);
    bool ext_ok = true;
    for (int e : {1, -1})
      for (int f : {0, 1}) ext_ok = ext_ok && count_of_order(ext16(e, f), 4) != 3;
    const bool ok = count_of_order(q8, 4) == 3 && count_of_order(d8, 4) == 1 && c4c4 > 3 && c4dd > 3 && c6 == 3 &&
                    ext_ok && exponent(q8) == 4 && center(q8).size() == 2 && frattini(q8) == center(q8);
    return {ok, "c4(C4xC4) = " + std::to_string(c4c4) + ", c4(D8*D8) = " + std::to_string(c4dd) +
                    ", c6(C2xC2xC3) = " + std::to_string(c6)};
  });

  criterion("AC6", "three or more primes implies deficiency > largest prime", 0, true, [&]() -> Verdict {
    std::size_t tested = 0;
    for (const auto& e : corpus) {
      if (e.census.pi.size() < 3) continue;
      ++tested;
      if (e.census.delta <= static_cast<std::int64_t>(e.census.pi.back())) return {false, e.label};
    }
    return {tested > 0, std::to_string(tested) + " groups"};
  });

  criterion("AC7", "deficiency 0 iff elementary abelian 2-group", 0, true, [&]() -> Verdict {
    std::size_t zero = 0;
    auto ok = [&](const Group& g, std::int64_t delta) {
      const bool ea = is_elementary_abelian_2(g);
      if (ea) ++zero;
      return (delta == 0) == ea;
    };
    for (const auto& e : corpus)
      if (!ok(e.group, e.census.delta)) return {false, e.label};
    for (const auto& g : small)
      if (!ok(g, census(g).delta)) return {false, g.label()};
    return {true, std::to_string(zero) + " elementary abelian 2-groups"};
  });

  criterion("AC8", "group counts 1..12 with oracle cross-check <= 8", 0, true, [&]() -> Verdict {
    constexpr std::size_t expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
    std::string counts;
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto c = count_groups(n);
      counts += (counts.empty() ? "" : ",") + std::to_string(c);
      if (c != expected[n - 1]) return {false, "order " + std::to_string(n) + ": " + counts};
      if (n <= 8 && oracle::NaiveEnumerator(static_cast<int>(n)).run().size() != c)
        return {false, "oracle disagrees at order " + std::to_string(n)};
    }
    return {true, counts};
  });

  criterion("AC8-stretch", "16 has 14 classes (opt-in, non-blocking)", 0, false, [&]() -> Verdict {
    EnumerationOptions opts;
    opts.allow_large = true;
    const auto c = count_groups(16, opts);
    return {c == 14, std::to_string(c) + " classes"};
  });

  criterion("AC9", "Sylow sizes, Frattini and quotient checks", 0, true, [&]() -> Verdict {
    std::vector<std::string> bad(corpus.size());
    parallel_for(corpus.size(), 4, [&](std::size_t i) {
      const auto& g = corpus[i].group;
      if (g.order() > kLatticeCap) return;
      for (auto p : corpus[i].census.pi)
        if (sylow(g, p).size() != p_part(g.order(), p)) bad[i] = corpus[i].label;
    });
    for (const auto& b : bad)
      if (!b.empty()) return {false, "Sylow size wrong for " + b};
    const auto c = build_group("C(4)xC(2)");
    const auto phi = frattini(c).size();
    const auto e = exponent(quotient(c, generated_subgroup(c, {2})));
    return {phi == 2 && e <= 2, "|Phi(C4xC2)| = " + std::to_string(phi) + ", exp(C/<x>) = " + std::to_string(e)};
  });

  criterion("AC10", "negative control with a corrupted dihedral table", 0, true, [&]() -> Verdict {
    const std::string base = std::string("\"") + CYCGRP_CLI + "\" verify-paper";
    const auto [clean_rc, clean] = run_command(base);
    const auto [rc, out] = run_command(base + " --dihedral-override \"" CYCGRP_FIXTURE_DIR "/corrupted_d10.txt\"");
    // Checks that pass on the clean run must be reported as named failures.
    const bool clean_ok = clean.find("PASS dihedral-deficiency") != std::string::npos;
    const bool named = out.find("FAIL dihedral-deficiency") != std::string::npos &&
                       out.find("FAIL deficiency-three-exhaustive-complete") != std::string::npos;
    return {clean_ok && named && rc != 0, "override exit " + std::to_string(rc) + ", clean exit " +
                                              std::to_string(clean_rc) + (named ? ", named FAIL lines present" : "")};
  });

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : (std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
