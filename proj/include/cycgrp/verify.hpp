#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycgrp/group.hpp"

namespace cycgrp {

struct CheckResult {
  /// Short stable identifier, e.g. "dihedral-deficiency".
  std::string name;
  /// The mathematical statement being checked.
  std::string claim;
  bool passed = false;
  /// Computed values, or the error that stopped the check.
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::size_t threads = 1;
  /// Largest order covered by exhaustive enumeration.
  std::size_t enumerate_max = 12;
  /// Specs forming the family corpus; empty means default_corpus().
  std::vector<std::string> corpus;
  /// Replaces the dihedral constructor everywhere in the run (negative controls).
  std::function<Group(std::size_t)> dihedral;
};

/// Runs every claim check. Failures, including exceptions thrown while a
/// check runs, are reported in the result rather than thrown.
std::vector<CheckResult> verify_claims(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

std::string format_results_text(const std::vector<CheckResult>& results);
nlohmann::json results_to_json(const std::vector<CheckResult>& results);

}  // namespace cycgrp
