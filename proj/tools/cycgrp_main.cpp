// cycgrp: cyclic-subgroup censuses, enumeration and deficiency scans.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cycgrp/census.hpp"
#include "cycgrp/constructions.hpp"
#include "cycgrp/corpus.hpp"
#include "cycgrp/enumeration.hpp"
#include "cycgrp/error.hpp"
#include "cycgrp/report.hpp"
#include "cycgrp/spec_parser.hpp"
#include "cycgrp/structure.hpp"
#include "cycgrp/verify.hpp"

using namespace cycgrp;
using nlohmann::json;

namespace {

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kInputError = 2, kCapError = 3, kInternalError = 4 };

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::CapExceeded:
      return kCapError;
    case Errc::NotSquare:
    case Errc::NotClosed:
    case Errc::NoIdentityAtZero:
    case Errc::NotLatinSquare:
    case Errc::NoInverse:
    case Errc::NotAssociative:
    case Errc::InvalidArgument:
    case Errc::SyntaxError:
    case Errc::UnknownAtom:
    case Errc::BadArity:
    case Errc::GeneratorsDontGenerate:
      return kInputError;
    default:
      return kInternalError;
  }
}

struct Globals {
  std::string format = "table";
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;  // reserved; every algorithm is deterministic
};

std::string elements_string(const ElementSet& s) {
  std::string out = "{";
  for (auto e : s.elements()) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

int cmd_census(const Globals& g, const std::string& spec) {
  const auto group = build_group(spec);
  std::cout << format_census(group.label(), census(group), parse_format(g.format));
  return kOk;
}

struct ScanRow {
  std::size_t order;
  std::string name;
  std::int64_t delta;
  std::string source;
};

int cmd_scan(const Globals& g, std::size_t max_order, std::int64_t delta, bool enumerate, const std::string& corpus_file,
             bool allow_large) {
  std::vector<ScanRow> rows;
  if (enumerate) {
    EnumerationOptions opts;
    opts.allow_large = allow_large;
    for (auto& m : scan_deficiency(1, max_order, delta, opts)) rows.push_back({m.order, m.name, m.delta, "enumeration"});
  } else {
    std::vector<GroupSpec> specs;
    if (corpus_file.empty()) {
      for (const auto& s : default_corpus()) specs.push_back(parse_spec(s));
    } else {
      std::ifstream in(corpus_file);
      if (!in) throw Error(Errc::InvalidArgument, "cannot open corpus file " + corpus_file);
      for (auto& e : read_manifest(in)) specs.push_back(std::move(e.spec));
    }
    std::vector<GroupSpec> kept;
    for (auto& s : specs)
      if (realize(s).order() <= max_order) kept.push_back(std::move(s));
    for (const auto& e : evaluate_corpus(kept, g.threads)) {
      if (e.census.delta != delta) continue;
      const auto order = e.group.order();
      rows.push_back({order, identify(e.group).value_or("UNKNOWN(order=" + std::to_string(order) + ")"), e.census.delta,
                      e.label});
    }
  }

  switch (parse_format(g.format)) {
    case ReportFormat::Json: {
      json out = json::array();
      for (const auto& r : rows) out.push_back({{"order", r.order}, {"name", r.name}, {"delta", r.delta}, {"source", r.source}});
      std::cout << out.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv:
      std::cout << "order,name,delta,source\n";
      for (const auto& r : rows) std::cout << r.order << "," << r.name << "," << r.delta << "," << r.source << "\n";
      break;
    case ReportFormat::Table:
      for (const auto& r : rows) {
        std::cout << r.order << "  " << r.name << "  delta=" << r.delta;
        if (r.source != "enumeration") std::cout << "  (" << r.source << ")";
        std::cout << "\n";
      }
      std::cout << rows.size() << " match" << (rows.size() == 1 ? "" : "es") << "\n";
      break;
  }
  return kOk;
}

int cmd_enumerate(const Globals& g, std::size_t n, bool tables, bool allow_large) {
  EnumerationOptions opts;
  opts.allow_large = allow_large;
  const auto report = enumerate_groups(n, opts);
  if (parse_format(g.format) == ReportFormat::Json) {
    json classes = json::array();
    for (const auto& rep : report.representatives) {
      json entry = {{"label", rep.label()}, {"delta", census(rep).delta}};
      if (tables) entry["table"] = table_to_string(rep);
      classes.push_back(entry);
    }
    std::cout << json{{"order", n}, {"count", report.count}, {"nodes", report.stats.nodes}, {"classes", classes}}.dump(2)
              << "\n";
    return kOk;
  }
  std::cout << report.count << " classes\n";
  for (const auto& rep : report.representatives) {
    if (tables)
      write_table(std::cout, rep);
    else
      std::cout << "  " << rep.label() << "\n";
  }
  return kOk;
}

int cmd_lattice(const Globals& g, const std::string& spec) {
  const auto group = build_group(spec);
  const auto lattice = subgroup_lattice(group, true);
  std::vector<std::vector<std::size_t>> below(lattice.subgroups.size());
  for (const auto& [lo, hi] : lattice.covers) below[hi].push_back(lo);
  if (parse_format(g.format) == ReportFormat::Json) {
    json subs = json::array();
    for (std::size_t i = 0; i < lattice.subgroups.size(); ++i) {
      const auto& h = lattice.subgroups[i];
      subs.push_back({{"order", h.size()},
                      {"elements", h.elements()},
                      {"normal", is_normal(group, h)},
                      {"covers", below[i]}});
    }
    std::cout << json{{"label", group.label()}, {"order", group.order()}, {"subgroups", subs}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << group.label() << ": " << lattice.subgroups.size() << " subgroups\n";
  for (std::size_t i = 0; i < lattice.subgroups.size(); ++i) {
    const auto& h = lattice.subgroups[i];
    std::cout << "  #" << i << " order " << h.size() << (is_normal(group, h) ? " normal " : " ") << elements_string(h);
    if (!below[i].empty()) {
      std::cout << " covers";
      for (auto c : below[i]) std::cout << " #" << c;
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& override_file) {
  VerifyOptions opts;
  opts.threads = g.threads;
  if (!override_file.empty()) {
    std::ifstream in(override_file);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + override_file);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto header = text.substr(0, text.find('\n'));
    std::size_t order = 0;
    if (std::sscanf(header.c_str(), "n=%zu", &order) != 1)
      throw Error(Errc::InvalidArgument, override_file + ": missing \"n=<order>\" header");
    // The table is parsed on each use so a malformed table surfaces as a
    // failing check rather than aborting the run.
    opts.dihedral = [text, order](std::size_t n) {
      if (n != order) return dihedral(n);
      std::istringstream is(text);
      return read_table(is);
    };
  }
  const auto results = verify_claims(opts);
  if (parse_format(g.format) == ReportFormat::Json)
    std::cout << results_to_json(results).dump(2) << "\n";
  else
    std::cout << format_results_text(results);
  return all_passed(results) ? kOk : kChecksFailed;
}

int cmd_corpus() {
  for (const auto& s : default_corpus()) std::cout << s << "\n";
  return kOk;
}

int cmd_table(const std::string& spec) {
  write_table(std::cout, build_group(spec));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic-subgroup census and small-group enumeration"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", globals.threads, "Worker threads for corpus work")->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "Reserved; all algorithms are deterministic");

  std::string spec;
  auto* census_cmd = app.add_subcommand("census", "Cyclic-subgroup census of a group");
  census_cmd->add_option("spec", spec, "Group expression, e.g. \"C(2)xD(10)\"")->required();

  std::size_t scan_max = kEnumerationDefaultMax;
  std::int64_t scan_delta = 0;
  bool scan_enumerate = false, allow_large = false;
  std::string corpus_file;
  auto* scan_cmd = app.add_subcommand("scan", "List groups with a given deficiency |G| - |C(G)|");
  scan_cmd->add_option("--max", scan_max, "Largest order")->capture_default_str();
  scan_cmd->add_option("--delta", scan_delta, "Target deficiency")->required();
  auto* mode_enum = scan_cmd->add_flag("--enumerate", scan_enumerate, "Scan every isomorphism class by enumeration");
  auto* mode_corpus = scan_cmd->add_option("--corpus", corpus_file, "Manifest of specs (default: built-in corpus)")
                          ->expected(0, 1);
  mode_enum->excludes(mode_corpus);
  scan_cmd->add_flag("--allow-large", allow_large, "Permit enumeration beyond order 12");

  std::size_t enum_n = 0;
  bool emit_tables = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate groups of order N up to isomorphism");
  enum_cmd->add_option("n", enum_n, "Order")->required();
  enum_cmd->add_flag("--tables", emit_tables, "Print a Cayley table per class");
  enum_cmd->add_flag("--allow-large", allow_large, "Permit orders 13..16");

  auto* lattice_cmd = app.add_subcommand("lattice", "Subgroup lattice of a group");
  lattice_cmd->add_option("spec", spec, "Group expression")->required();

  std::string override_file;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every claim check and report PASS/FAIL per claim");
  verify_cmd->add_option("--dihedral-override", override_file, "Cayley table file replacing the dihedral group of its order");

  auto* corpus_cmd = app.add_subcommand("corpus", "Print the built-in corpus manifest");
  auto* table_cmd = app.add_subcommand("table", "Print the Cayley table of a group");
  table_cmd->add_option("spec", spec, "Group expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*census_cmd) return cmd_census(globals, spec);
    if (*scan_cmd) return cmd_scan(globals, scan_max, scan_delta, scan_enumerate, corpus_file, allow_large);
    if (*enum_cmd) return cmd_enumerate(globals, enum_n, emit_tables, allow_large);
    if (*lattice_cmd) return cmd_lattice(globals, spec);
    if (*verify_cmd) return cmd_verify(globals, override_file);
    if (*corpus_cmd) return cmd_corpus();
    if (*table_cmd) return cmd_table(spec);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
