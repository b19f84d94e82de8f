#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sheafforge/golden.hpp"
#include "sheafforge/parse.hpp"

using namespace sheafforge;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli_report") {
  TEST_CASE("ideal input") {
    ParsedInput in = parse_input("ring x, y\nideal: x^3, y^3\n");
    CHECK(in.ring->names() == std::vector<std::string>{"x", "y"});
    REQUIRE(in.ideal.size() == 2);
    CHECK(in.ring->format(in.ideal[1]) == "y^3");
    CHECK_FALSE(in.presentation.has_value());
    CHECK(input_presentation(in).num_generators() == 2);
  }

  TEST_CASE("double caret is located") {
    try {
      parse_polynomial("x^^2", std::vector<std::string>{"x", "y"});
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 3);
      CHECK(std::string(e.what()).find("expected integer exponent") != std::string::npos);
    }
  }

  TEST_CASE("errors carry line numbers") {
    try {
      parse_input("ring x, y\n# comment\nideal: x, q\n");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 11);
    }
    CHECK_THROWS_AS(parse_input(""), ParseError);
    CHECK_THROWS_AS(parse_input("ring x\nwhatever: x\n"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x/2", std::vector<std::string>{"x"}), ParseError);
  }

  TEST_CASE("cusp ring header") {
    ParsedInput in = parse_input("ring x, y | relations: x^3 - y^2\nideal: x, y\n");
    CHECK_FALSE(in.ring->is_free());
    CHECK(in.ring->is_zero(in.ring->parse("x^3 - y^2")));
  }

  TEST_CASE("grammar details") {
    std::vector<std::string> names{"x", "y"};
    CHECK(parse_polynomial("2x y", names) == parse_polynomial("2*x*y", names));
    CHECK(parse_polynomial("(x + y)^2", names) == parse_polynomial("x^2 + 2*x*y + y^2", names));
    CHECK(parse_polynomial("1/2 x - 3/4", names).leading_coeff() == Rational(1, 2));
    CHECK(parse_point("1/2, -3") == std::vector<Rational>{Rational(1, 2), Rational(-3)});
  }

  TEST_CASE("presentation files round trip") {
    RingPtr r = free_ring({"x", "y"});
    Presentation p(r, 2, {Vec{r->parse("y"), r->parse("-x")}, Vec{r->parse("x^2"), r->zero()}});
    ParsedInput back = parse_input(format_presentation_file(p));
    REQUIRE(back.presentation.has_value());
    CHECK(back.presentation->num_generators() == 2);
    CHECK(back.presentation->num_relations() == 2);
    CHECK(back.presentation->relations() == p.relations());
  }

  TEST_CASE("report exit codes") {
    Report r;
    r.checks.push_back({"a", "A 1", CheckStatus::kPass, "", 1});
    CHECK(r.exit_code() == 0);
    r.checks.push_back({"b", "A 1", CheckStatus::kInconclusive, "", 1});
    CHECK(r.exit_code() == 0);
    r.checks.push_back({"c", "A 1", CheckStatus::kFail, "", 1});
    CHECK(r.exit_code() == 1);
    CHECK(r.count(CheckStatus::kPass) == 1);
  }

  TEST_CASE("golden report, byte exact") {
    GoldenOptions o;
    std::string got = report_json(verify_paper(o), true);
    std::string want = slurp(std::string(SHEAFFORGE_GOLDEN_DIR) + "/verify_paper.json");
    CHECK(got == want);
  }

  TEST_CASE("every check carries one anchor and passes") {
    Report r = verify_paper();
    CHECK(r.checks.size() == golden_check_ids().size());
    for (const CheckRecord& c : r.checks) {
      CHECK_FALSE(c.anchor.empty());
      CHECK_MESSAGE(c.status == CheckStatus::kPass, c.id << ": " << c.detail);
    }
    CHECK(r.ok());
  }

  TEST_CASE("report order is deterministic") {
    GoldenOptions serial;
    serial.parallel = false;
    CHECK(report_json(verify_paper(serial), true) == report_json(verify_paper(), true));
  }

  TEST_CASE("subset by id prefix") {
    GoldenOptions o;
    o.only = {"rem-4.2"};
    Report r = verify_paper(o);
    CHECK(r.checks.size() == 5);
    for (const CheckRecord& c : r.checks) CHECK(c.anchor == "Rem 4.2");
  }

  TEST_CASE("saturation fault is caught") {
    GoldenOptions o;
    o.only = {"rem-3.3-primary-component"};
    o.inject_saturation_fault = true;
    Report r = verify_paper(o);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].status == CheckStatus::kFail);
    CHECK(r.checks[0].detail == "z2^2 - z1*z3 not in computed primary component");
    CHECK(r.exit_code() == 1);
  }

  TEST_CASE("classify json fields") {
    RingPtr r = free_ring({"x", "y"});
    ClassifyReport c = classify_sheaf(presentation_of_ideal(r, {r->var(0), r->var(1)}), {Rational(0), Rational(0)});
    std::string j = classify_json(c);
    CHECK(j.find("\"schema_version\": 1") != std::string::npos);
    CHECK(j.find("\"thm12_consistent\": true") != std::string::npos);
    CHECK(j.find("\"singular_locus\": [\n    \"x\",\n    \"y\"\n  ]") != std::string::npos);
  }
}
