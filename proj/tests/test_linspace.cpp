#include "doctest.h"
#include "sheafforge/linspace.hpp"

using namespace sheafforge;

namespace {

Presentation nonreduced_example() {
  RingPtr r = free_ring({"x", "y"});
  return presentation_of_ideal(r, {r->parse("x^2"), r->parse("x*y^2"), r->parse("y^4")});
}

}  // namespace

TEST_SUITE("linspace") {
  TEST_CASE("fiber ideal of (x^2, xy^2, y^4)") {
    LinearSpaceIdeal l = linear_space_ideal(nonreduced_example());
    CHECK(l.fiber_vars == std::vector<std::string>{"z1", "z2", "z3"});
    CHECK(l.joint_ring->names() == std::vector<std::string>{"x", "y", "z1", "z2", "z3"});
    CHECK(ideal_equal(l.ideal, Ideal::parse(l.joint_ring, {"y^2*z1 - x*z2", "y^2*z2 - x*z3"})));
    CHECK(l.embed(l.base_ring->parse("x*y")) == l.joint_ring->parse("x*y"));
    CHECK(l.z(1) == l.joint_ring->parse("z2"));
  }

  TEST_CASE("fiber degree") {
    RingPtr r = free_ring({"x", "y", "z1", "z2"});
    CHECK(z_degree(r->parse("x^5*z1 + z1*z2^2"), 2) == 3);
    CHECK(z_degree(r->parse("x^5"), 2) == 0);
    CHECK(z_degree(r->zero(), 2) == -1);
  }

  TEST_CASE("fiber variables avoid base names") {
    RingPtr r = free_ring({"z1", "y"});
    LinearSpaceIdeal l = linear_space_ideal(presentation_of_ideal(r, {r->var(0), r->var(1)}));
    CHECK(l.fiber_vars == std::vector<std::string>{"z1_", "z2"});
  }

  TEST_CASE("primary component adds z2^2 - z1 z3") {
    LinearSpaceIdeal l = linear_space_ideal(nonreduced_example());
    PrimaryComponentIdeal pc = primary_component(l);
    Ideal want = Ideal::parse(l.joint_ring, {"y^2*z1 - x*z2", "y^2*z2 - x*z3", "z2^2 - z1*z3"});
    CHECK(ideal_equal(pc.ideal, want));
    CHECK_FALSE(pc_is_linear(pc));
    CHECK(pc.exponent >= 1);
  }

  TEST_CASE("the maximal ideal has a linear primary component") {
    RingPtr r = free_ring({"x", "y"});
    LinearSpaceIdeal l = linear_space_ideal(presentation_of_ideal(r, {r->var(0), r->var(1)}));
    PrimaryComponentIdeal pc = primary_component(l);
    CHECK(ideal_equal(pc.ideal, l.ideal));
    CHECK(pc_is_linear(pc));
  }

  TEST_CASE("primary component needs a nonzero singular ideal") {
    LinearSpaceIdeal l = linear_space_ideal(nonreduced_example());
    CHECK_THROWS_AS(primary_component(l, Ideal::zero(l.base_ring)), std::invalid_argument);
  }

  TEST_CASE("reducedness witness") {
    LinearSpaceIdeal l = linear_space_ideal(nonreduced_example());
    ReducednessVerdict v = reducedness_witness(l.ideal, l.joint_ring->parse("y*(z2^2 - z1*z3)"), 2);
    CHECK(v.confirmed);
    CHECK_FALSE(v.g_in_j);
    CHECK(v.gk_in_j);
    ReducednessVerdict no = reducedness_witness(l.ideal, l.joint_ring->parse("z1"), 2);
    CHECK_FALSE(no.confirmed);
  }

  TEST_CASE("normal hypersurfaces") {
    RingPtr r = free_ring({"x", "y", "z1", "z2"});
    CHECK(is_normal_hypersurface(r, r->parse("y*z1 - x*z2")));
    RingPtr p = free_ring({"x", "y"});
    CHECK_FALSE(is_normal_hypersurface(p, p->parse("x^3 - y^2")));
    RingPtr s = free_ring({"x", "y", "z"});
    CHECK(is_normal_hypersurface(s, s->parse("x^3 - y^2")) == false);
    CHECK(is_normal_hypersurface(s, s->parse("x*y - z^2")));
  }

  TEST_CASE("base singular ideal of the cusp") {
    RingPtr c = CoordinateRing::make({"x", "y"}, std::vector<std::string>{"x^3 - y^2"});
    Ideal s = base_singular_ideal(c);
    CHECK(s.contains(c->parse("x^2")));
    CHECK(s.contains(c->parse("y")));
    CHECK_FALSE(s.is_unit());
  }
}
