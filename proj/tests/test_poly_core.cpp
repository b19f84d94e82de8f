#include "doctest.h"
#include "sheafforge/parse.hpp"
#include "sheafforge/ring.hpp"

using namespace sheafforge;

TEST_SUITE("poly_core") {
  TEST_CASE("rationals stay canonical") {
    Rational q(6, 4);
    q.canonicalize();
    CHECK(q.get_num() == 3);
    CHECK(q.get_den() == 2);
    CHECK(is_zero(Rational(0)));
    CHECK(parse_rational("-4/6") == Rational(-2) / 3);
  }

  TEST_CASE("difference of squares") {
    RingPtr r = free_ring({"x", "y"});
    Polynomial f = r->mul(r->parse("x + y"), r->parse("x - y"));
    CHECK(f == r->parse("x^2 - y^2"));
    CHECK(r->format(f) == "x^2 - y^2");
  }

  TEST_CASE("products vanish against zero") {
    RingPtr r = free_ring({"x", "y"});
    CHECK(r->mul(r->parse("x^3 + 2*y"), r->zero()).is_zero());
  }

  TEST_CASE("cusp ring reduces y^4") {
    // x^3 leads x^3 - y^2 under degrevlex, so x^3 rewrites to y^2 and y^4
    // is already normal. It equals x^6.
    RingPtr c = CoordinateRing::make({"x", "y"}, std::vector<std::string>{"x^3 - y^2"});
    Polynomial y4 = c->mul(c->parse("y^2"), c->parse("y^2"));
    CHECK(c->equal(y4, c->parse("x^6")));
    CHECK(c->format(y4) == "y^4");
    CHECK(c->is_zero(c->parse("x^3 - y^2")));
    CHECK(c->format(c->parse("x^3")) == "y^2");
  }

  TEST_CASE("poly_arith dispatch") {
    RingPtr r = free_ring({"x", "y"});
    Polynomial f = r->parse("x + 1"), g = r->parse("y");
    CHECK(poly_arith(*r, f, g, ArithOp::kAdd) == r->parse("x + y + 1"));
    CHECK(poly_arith(*r, f, g, ArithOp::kSub) == r->parse("x - y + 1"));
    CHECK(poly_arith(*r, f, g, ArithOp::kMul) == r->parse("x*y + y"));
    RingPtr s = free_ring({"a"});
    CHECK_THROWS(poly_arith(*r, f, s->var(0), ArithOp::kAdd));
  }

  TEST_CASE("blow-up chart substitution") {
    RingPtr base = free_ring({"x", "y"});
    RingPtr chart = free_ring({"x", "t"});
    RingMap phi(base, chart, {chart->parse("x"), chart->parse("x*t")});
    CHECK(apply_map(phi, base->parse("y^3")) == chart->parse("x^3*t^3"));
  }

  TEST_CASE("normalization kills the cusp equation") {
    RingPtr base = free_ring({"x", "y"});
    RingPtr line = free_ring({"t"});
    RingMap phi(base, line, {line->parse("t^2"), line->parse("t^3")});
    CHECK(apply_map(phi, base->parse("x^3 - y^2")).is_zero());
    RingPtr cusp = CoordinateRing::make({"x", "y"}, std::vector<std::string>{"x^3 - y^2"});
    CHECK_NOTHROW(RingMap(cusp, line, {line->parse("t^2"), line->parse("t^3")}));
    CHECK_THROWS_AS(RingMap(cusp, line, {line->parse("t^2"), line->parse("t^2")}), std::invalid_argument);
  }

  TEST_CASE("identity map") {
    RingPtr r = free_ring({"x", "y"});
    Polynomial f = r->parse("3*x^2*y - 1/2*y + 7");
    CHECK(apply_map(RingMap::identity(r), f) == f);
  }

  TEST_CASE("monomial orders") {
    RingPtr lex = free_ring({"x", "y"}, MonomialOrder::lex());
    RingPtr drl = free_ring({"x", "y"});
    CHECK(lex->format(lex->parse("y^3 + x")) == "x + y^3");
    CHECK(drl->format(drl->parse("y^3 + x")) == "y^3 + x");
    MonomialOrder w = MonomialOrder::weighted({0, 1}, MonomialOrder::degrevlex());
    RingPtr wr = free_ring({"x", "z"}, w);
    CHECK(wr->format(wr->parse("x^5 + z")) == "z + x^5");
  }

  TEST_CASE("evaluation and points") {
    RingPtr c = CoordinateRing::make({"x", "y"}, std::vector<std::string>{"x^3 - y^2"});
    std::vector<Rational> on{Rational(4), Rational(8)}, off{Rational(1), Rational(2)};
    CHECK(c->contains_point(on));
    CHECK_FALSE(c->contains_point(off));
  }

  TEST_CASE("ring header") {
    RingPtr c = parse_ring_header("ring x, y | relations: x^3 - y^2 | order: lex");
    CHECK(c->names() == std::vector<std::string>{"x", "y"});
    CHECK_FALSE(c->is_free());
    CHECK(c->header() == "ring x, y | relations: x^3 - y^2 | order: lex");
  }
}
