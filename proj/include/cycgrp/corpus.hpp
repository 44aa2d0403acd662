#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cycgrp/census.hpp"
#include "cycgrp/group.hpp"
#include "cycgrp/spec_parser.hpp"

namespace cycgrp {

/// The shipped family corpus, in a fixed order:
///   C(n) for n <= 200; D(2n) and Q(4n) up to order 200; S(n), A(n) for n <= 5;
///   E(2,2..6), E(3,2..3), E(5,2); ES(+/-,8), ES(+/-,32); the four EXT16;
///   products of two or three atoms of order <= 64 drawn from C(2..32),
///   D(6..32), Q(8..32), A(4).
std::vector<std::string> default_corpus();

struct ManifestEntry {
  std::size_t line = 0;
  std::string text;
  GroupSpec spec;
};

/// One spec per line; '#' starts a comment; blank lines are skipped.
/// Parse failures throw Error(SyntaxError / UnknownAtom / BadArity) whose
/// message starts with "line N:".
std::vector<ManifestEntry> read_manifest(std::istream& is);

struct CorpusEntry {
  std::string label;
  Group group;
  CyclicCensus census;
};

/// Realizes and censuses every spec, then sorts by (order, label).
std::vector<CorpusEntry> evaluate_corpus(const std::vector<GroupSpec>& specs, std::size_t threads = 1,
                                         const RealizeOptions& options = {});

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace cycgrp
