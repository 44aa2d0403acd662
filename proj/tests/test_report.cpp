#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cycgrp/census.hpp"
#include "cycgrp/constructions.hpp"
#include "cycgrp/corpus.hpp"
#include "cycgrp/error.hpp"
#include "cycgrp/report.hpp"
#include "cycgrp/spec_parser.hpp"

using namespace cycgrp;

TEST_CASE("JSON census schema") {
  const auto j = census_to_json("Q(8)", census(dicyclic(8)));
  for (const char* key : {"label", "order", "c", "pi_e", "pi", "pi_c", "num_cyclic", "delta", "identity_order_sum",
                          "identity_eq1"})
    CHECK(j.contains(key));
  CHECK(j.size() == 10);
  CHECK(j["c"]["4"] == 3);
  CHECK(j["delta"] == 3);
  CHECK(j["identity_eq1"] == true);
}

TEST_CASE("JSON census round trip") {
  for (const auto& text : {"Q(8)", "D(14)", "C(1)", "A(5)", "C(2)xC(2)xC(3)", "ES(-,32)"}) {
    const auto g = build_group(text);
    const auto c = census(g);
    std::string label;
    const auto back = census_from_json(nlohmann::json::parse(census_to_json(g.label(), c).dump()), &label);
    CHECK(back == c);
    CHECK(label == g.label());
  }
  CHECK_THROWS(census_from_json(nlohmann::json::object()));
}

TEST_CASE("CSV and text reports") {
  const auto c = census(dicyclic(8));
  const auto row = census_to_csv_row("Q(8)", c);
  CHECK(row.find("1:1;2:1;4:3") != std::string::npos);
  CHECK(census_csv_header().rfind("label,order", 0) == 0);
  const auto text = census_to_text("Q(8)", c);
  CHECK(text.find("delta") != std::string::npos);
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("table serialization round trip") {
  const auto g = dihedral(10);
  const auto text = table_to_string(g);
  CHECK(text.rfind("n=10 label=D(10)\n", 0) == 0);
  std::istringstream in(text);
  const auto back = read_table(in);
  CHECK(back.label() == "D(10)");
  const auto a = g.flat_table(), b = back.flat_table();
  CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
}

TEST_CASE("malformed tables") {
  auto code_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_table(in);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::BadArity;  // sentinel: accepted
  };
  CHECK(code_of("") == Errc::InvalidArgument);
  CHECK(code_of("n=2\n0 1\n") == Errc::InvalidArgument);
  CHECK(code_of("n=2 label=x\n0 1\n1 1\n") == Errc::NotLatinSquare);
  CHECK(code_of("n=2 label=x\n0 1\n1 5\n") == Errc::NotClosed);
}

TEST_CASE("fixtures") {
  std::ifstream corrupted(CYCGRP_FIXTURE_DIR "/corrupted_d10.txt");
  REQUIRE(corrupted);
  CHECK_THROWS_AS(read_table(corrupted), Error);

  std::ifstream wrong(CYCGRP_FIXTURE_DIR "/cyclic_as_d10.txt");
  REQUIRE(wrong);
  const auto g = read_table(wrong);
  CHECK(g.order() == 10);
  CHECK(census(g).delta == 6);
}

TEST_CASE("manifest reading") {
  std::istringstream in("# comment\n\nC(2)\n  D(10)  # trailing\nQ(8)\n");
  const auto entries = read_manifest(in);
  REQUIRE(entries.size() == 3);
  CHECK(entries[1].line == 4);
  CHECK(entries[1].text == "D(10)");

  std::istringstream bad("C(2)\nC(3\n");
  try {
    read_manifest(bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("shipped corpus file matches the built-in corpus") {
  std::ifstream in(CYCGRP_DATA_DIR "/corpus.txt");
  REQUIRE(in);
  const auto entries = read_manifest(in);
  const auto builtin = default_corpus();
  REQUIRE(entries.size() == builtin.size());
  for (std::size_t i = 0; i < entries.size(); ++i) CHECK(entries[i].text == builtin[i]);
}

TEST_CASE("corpus contents") {
  const auto corpus = default_corpus();
  CHECK(corpus.size() > 300);
  for (const char* s : {"C(6)", "D(10)", "Q(8)", "D(12)", "S(3)", "A(5)", "S(5)", "ES(+,32)", "ES(-,32)", "EXT16(-1,1)",
                        "C(30)", "D(30)", "C(2)xC(3)xC(5)", "C(4)xC(4)", "C(2)xC(2)xC(3)", "D(194)", "Q(200)"})
    CHECK_MESSAGE(std::find(corpus.begin(), corpus.end(), s) != corpus.end(), s);
  for (const auto& s : corpus) CHECK(print_spec(parse_spec(s)) == s);
}

TEST_CASE("corpus evaluation is independent of thread count") {
  std::vector<GroupSpec> specs;
  for (const auto& s : {"D(10)", "C(7)", "Q(8)", "C(2)xC(4)", "A(4)", "C(3)"}) specs.push_back(parse_spec(s));
  const auto one = evaluate_corpus(specs, 1);
  const auto four = evaluate_corpus(specs, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].label == four[i].label);
    CHECK(one[i].census == four[i].census);
  }
  CHECK(one.front().label == "C(3)");
  CHECK(one.back().label == "A(4)");
}
