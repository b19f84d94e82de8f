#include "doctest.h"
#include "sheafforge/ideal.hpp"

using namespace sheafforge;

namespace {

Ideal I(const RingPtr& r, std::vector<std::string> g) { return Ideal::parse(r, g); }

RingPtr plane() { return free_ring({"x", "y"}); }

RingPtr fiber_ring() { return free_ring({"x", "y", "z1", "z2", "z3"}); }

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("monomial input is its own basis") {
    RingPtr r = plane();
    auto gb = groebner_basis(I(r, {"x^3", "y^3"}), MonomialOrder::degrevlex());
    REQUIRE(gb.size() == 2);
    CHECK(r->format(gb[0]) == "x^3");
    CHECK(r->format(gb[1]) == "y^3");
  }

  TEST_CASE("unit collapse") {
    RingPtr r = plane();
    auto gb = groebner_basis(I(r, {"1", "x"}), MonomialOrder::degrevlex());
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == r->one());
    CHECK(I(r, {"x*y - 1", "x"}).is_unit());
  }

  TEST_CASE("linear space membership") {
    RingPtr r = fiber_ring();
    Ideal j = I(r, {"y^2*z1 - x*z2", "y^2*z2 - x*z3"});
    Polynomial g = r->parse("y*(z2^2 - z1*z3)");
    CHECK_FALSE(membership(g, j));
    CHECK(membership(g * g, j));
    CHECK(membership(r->zero(), j));
    // the basis holds x*(z2^2 - z1*z3)
    CHECK(j.contains(r->parse("x*(z2^2 - z1*z3)")));
  }

  TEST_CASE("basis is independent of generator order") {
    RingPtr r = fiber_ring();
    auto a = I(r, {"y^2*z1 - x*z2", "y^2*z2 - x*z3"}).basis();
    auto b = I(r, {"y^2*z2 - x*z3", "3*y^2*z1 - 3*x*z2"}).basis();
    CHECK(a == b);
  }

  TEST_CASE("intersection of coprime principal ideals") {
    RingPtr r = plane();
    CHECK(ideal_equal(intersect(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
    CHECK(ideal_equal(ideal_ops(I(r, {"x"}), I(r, {"y"}), IdealOp::kIntersect), I(r, {"x*y"})));
  }

  TEST_CASE("sum, product, quotient") {
    RingPtr r = plane();
    CHECK(ideal_equal(ideal_sum(I(r, {"x"}), I(r, {"y"})), I(r, {"x", "y"})));
    CHECK(ideal_equal(ideal_product(I(r, {"x", "y"}), I(r, {"x", "y"})), I(r, {"x^2", "x*y", "y^2"})));
    CHECK(ideal_equal(quotient(I(r, {"x^3", "y^3"}), I(r, {"x", "y"})),
                      I(r, {"x^3", "y^3", "x^2*y^2"})));
    CHECK(quotient(I(r, {"x"}), r->zero()).is_unit());
  }

  TEST_CASE("saturation of (x^3, y^3) by x") {
    RingPtr r = plane();
    SaturationResult s = saturate(I(r, {"x^3", "y^3"}), r->parse("x"));
    CHECK(s.ideal.is_unit());
    CHECK(s.exponent == 3);
    CHECK_THROWS_AS(saturate(I(r, {"x"}), r->zero()), std::invalid_argument);
  }

  TEST_CASE("saturation removes an embedded component") {
    RingPtr r = plane();
    SaturationResult s = saturate(I(r, {"x^2", "x*y"}), r->parse("y"));
    CHECK(ideal_equal(s.ideal, I(r, {"x"})));
    CHECK(s.exponent == 1);
    CHECK(ideal_equal(quotient_power(I(r, {"x^2", "x*y"}), r->parse("y"), 1), I(r, {"x"})));
  }

  TEST_CASE("elimination") {
    RingPtr r = free_ring({"t", "x", "y"});
    Ideal graph = I(r, {"x - t^2", "y - t^3"});
    Ideal e = eliminate(graph, {0});
    CHECK(ideal_equal(e, I(r, {"x^3 - y^2"})));
  }

  TEST_CASE("dimension") {
    RingPtr r = free_ring({"x", "y", "z"});
    DimensionInfo d = dimension(I(r, {"x", "y"}));
    CHECK(d.dim == 1);
    CHECK(d.codim == 2);
    DimensionInfo u = dimension(Ideal::unit(r));
    CHECK(u.dim == -1);
    CHECK(u.dim + u.codim == 3);
    CHECK(dimension(Ideal::zero(r)).dim == 3);
    CHECK(ring_dimension(*CoordinateRing::make({"x", "y"}, std::vector<std::string>{"x^3 - y^2"})) == 1);
  }

  TEST_CASE("quotient ring ideals") {
    RingPtr c = CoordinateRing::make({"x", "y"}, std::vector<std::string>{"x^3 - y^2"});
    Ideal m = I(c, {"x", "y"});
    CHECK(m.contains(c->parse("y^2")));
    CHECK_FALSE(m.contains(c->one()));
    CHECK(I(c, {"x"}).contains(c->parse("y^2")));
  }

  TEST_CASE("radicals") {
    RingPtr r = plane();
    CHECK(ideal_equal(radical(I(r, {"x^2*y", "y^3"})), I(r, {"y"})));
    CHECK(ideal_equal(radical(I(r, {"x^2*(x - y)^3"})), I(r, {"x*(x - y)"})));
    CHECK(ideal_equal(radical(I(r, {"x^2", "y^2 - x"})), I(r, {"x", "y"})));
    CHECK(radical_membership(r->parse("x + y"), I(r, {"x^3", "y^3"})));
    CHECK_FALSE(radical_membership(r->parse("x + 1"), I(r, {"x^3", "y^3"})));
    CHECK(r->format(squarefree_part(r->parse("x^3*y^2"))) == "x*y");
    CHECK(r->format(poly_gcd(r->parse("x^2*y"), r->parse("x*y^3"))) == "x*y");
    CHECK_THROWS_AS(radical(I(r, {"x^2*y", "x*y^2 + x^3"})), std::domain_error);
  }
}
