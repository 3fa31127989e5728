#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "colourcong/dissection.hpp"
#include "colourcong/report.hpp"

using namespace colourcong;

namespace {

std::vector<CongruenceClaim> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_claims(in, "t.claims");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 9999;
}

VerificationReport with_status(Status s) {
  VerificationReport r;
  r.status = s;
  return r;
}

}  // namespace

TEST_CASE("claim file parsing") {
  const auto claims = parse(
      "# families\n"
      "\n"
      "5 2 5 5 2,3,4 0..4 0..98   # second family\n"
      "  0 -4 11 11 9 0..0 0..29\n");
  REQUIRE(claims.size() == 2);
  CHECK(claims[0].label == "t.claims:3");
  CHECK(claims[0].r_slope == 5);
  CHECK(claims[0].r_intercept == 2);
  CHECK(claims[0].residues == std::vector<std::int64_t>{2, 3, 4});
  CHECK(claims[0].k_range == InclusiveRange{0, 4});
  CHECK(claims[0].n_range == InclusiveRange{0, 98});
  CHECK(claims[1].r_intercept == -4);
  CHECK(claims[1].modulus == 11);
  CHECK(claims[1].label == "t.claims:4");
}

TEST_CASE("claim file diagnostics carry the line") {
  CHECK(error_line("5 1 5 5 4 0..4\n") == 1);
  CHECK(error_line("# ok\n5 1 5 5 4 0..4 0..9\n5 1 5 5 x 0..4 0..9\n") == 3);
  CHECK(error_line("5 1 5 5 4 0-4 0..9\n") == 1);
  CHECK(error_line("5 1 5 5 9 0..4 0..9\n") == 1);
  CHECK(error_line("5 1 1 5 4 0..4 0..9\n") == 1);
  CHECK(error_line("0 0 5 5 4 0..0 0..9\n") == 1);
  CHECK(error_line("5 1 5 5 4,,3 0..4 0..9\n") == 1);
  CHECK(error_line("# nothing\n") == 0);
  try {
    parse("\n\n5 1 5 5 4 0..4 0..9 extra\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("t.claims:3:", 0) == 0);
  }
  CHECK_THROWS_AS(load_claim_file("/nonexistent/x.claims"), ParseError);
}

TEST_CASE("product spec parsing") {
  const auto s = parse_product_spec("(1)^-2  (5,25)^1 (49)^4");
  REQUIRE(s.factors().size() == 3);
  CHECK(s.factors()[0] == PochhammerFactor{1, 1, -2});
  CHECK(s.factors()[1] == PochhammerFactor{5, 25, 1});
  CHECK(s.factors()[2] == PochhammerFactor{49, 49, 4});
  for (const char* bad : {"", "  ", "(1)", "1^2", "(a)^1", "(1)^x", "(0)^1", "(2,0)^1", "(1,)^1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_product_spec(bad), ParseError);
  }
}

TEST_CASE("run config") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.bound = 9;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.bound = 10;
  CHECK_NOTHROW(c.validate());
  c.k_max = -1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_FALSE(parse_format("xml"));
  CHECK(to_string(Format::plain) == "plain");
}

TEST_CASE("range overrides") {
  auto claims = suite_claims(Suite::classical);
  auto families = suite_claims(Suite::mod5);
  RunConfig c;
  c.k_max = 1;
  c.n_max = 7;
  apply_range_overrides(claims, c);
  apply_range_overrides(families, c);
  for (const auto& x : claims) {
    CHECK(x.k_range.hi == 0);
    CHECK(x.n_range.hi == 7);
  }
  for (const auto& x : families) CHECK(x.k_range.hi == 1);
}

TEST_CASE("exit codes") {
  using S = Status;
  CHECK(exit_code({}) == 0);
  CHECK(exit_code({with_status(S::pass), with_status(S::pass)}) == 0);
  CHECK(exit_code({with_status(S::pass), with_status(S::inconclusive)}) == 3);
  CHECK(exit_code({with_status(S::inconclusive), with_status(S::fail)}) == 1);
  CHECK(exit_code({with_status(S::fail), with_status(S::pass)}) == 1);
}

TEST_CASE("json report records") {
  auto claims = parse("5 1 5 5 3 0..4 0..98\n5 1 5 5 4 0..4 0..98\n");
  auto reports = verify_all(claims);
  reports[0].wall_time_ms = 1.5;
  const auto j = nlohmann::json::parse(render_reports(reports, Format::json));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  const auto& fail = j[0];
  CHECK(fail["status"] == "fail");
  CHECK(fail["claim"]["c"] == 5);
  CHECK(fail["claim"]["d"] == 1);
  CHECK(fail["claim"]["m"] == 5);
  CHECK(fail["claim"]["A"] == 5);
  CHECK(fail["claim"]["residues"] == nlohmann::json::array({3}));
  CHECK(fail["claim"]["k_range"] == nlohmann::json::array({0, 4}));
  CHECK(fail["claim"]["n_range"] == nlohmann::json::array({0, 98}));
  CHECK(fail["counterexample"]["k"] == 0);
  CHECK(fail["counterexample"]["n"] == 0);
  CHECK(fail["counterexample"]["value"] == 3);
  CHECK(fail["checked_count"] == 1);
  CHECK_FALSE(fail.contains("wall_time_ms"));
  CHECK(j[1]["status"] == "pass");
  CHECK_FALSE(j[1].contains("counterexample"));
  CHECK(j[1]["truncation_used"] == 494);

  const auto timed = nlohmann::json::parse(render_reports(reports, Format::json, true));
  CHECK(timed[0]["wall_time_ms"] == 1.5);
}

TEST_CASE("csv and plain reports") {
  const auto reports = verify_all(parse("5 2 5 5 2,3,4 0..1 0..10\n5 1 5 5 3 0..0 0..10\n"));
  const auto csv = render_reports(reports, Format::csv);
  std::istringstream lines(csv);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header.rfind("label,c,d,m,A,residues,", 0) == 0);
  CHECK(row1.find(",2;3;4,") != std::string::npos);
  CHECK(row1.find(",pass,") != std::string::npos);
  CHECK(row2.find(",fail,") != std::string::npos);
  CHECK(row2.substr(row2.size() - 12) == ",0,0,1,3,3,3");

  const auto plain = render_reports(reports, Format::plain);
  CHECK(plain.find("counterexample: k=0 n=0 r=1 B=3") != std::string::npos);
  CHECK(plain.find("1 pass, 1 fail, 0 inconclusive") != std::string::npos);
}

TEST_CASE("reports render byte-identically") {
  const auto a = render_reports(verify_theorem_suite(Suite::mod7), Format::json);
  const auto b = render_reports(verify_theorem_suite(Suite::mod7), Format::json);
  CHECK(a == b);
}

TEST_CASE("identity and dissection output") {
  const auto r = check_identity(IdentityId::eqj3, 300);
  const auto j = nlohmann::json::parse(render_identity(r, Format::json));
  CHECK(j["id"] == "eqj3");
  CHECK(j["ring"] == "Z/7Z");
  CHECK(j["status"] == "pass");
  CHECK(j["validity_bound"] == 294);
  CHECK_FALSE(j.contains("first_difference"));
  CHECK(render_identity(r, Format::plain).rfind("PASS", 0) == 0);

  DissectionReport d;
  d.expression = "(1)^3";
  d.modulus = 7;
  d.bound = 100;
  d.components = dissect_full(pochhammer(parse_product_spec(d.expression), d.ring, d.bound), 7);
  const auto dj = nlohmann::json::parse(render_dissection(d, Format::json));
  REQUIRE(dj["components"].size() == 7);
  for (int i : {2, 4, 5}) CHECK(dj["components"][i]["zero"] == true);
  for (int i : {0, 1, 3, 6}) CHECK(dj["components"][i]["zero"] == false);
  CHECK(dj["components"][1]["coefficients"][0] == -3);
  CHECK(render_dissection(d, Format::plain).find("j=2 (zero)") != std::string::npos);
}
