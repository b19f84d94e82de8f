// Seeded property suites; each runs cases::kCases cases.

#include "doctest.h"
#include "property_cases.hpp"

using namespace sheafforge;
using cases::kCases;

namespace {

std::string seed_note(unsigned seed) { return "seed " + std::to_string(seed); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("ring axioms hold") {
    RingPtr c = CoordinateRing::make({"x", "y"}, std::vector<std::string>{"x^3 - y^2"});
    for (unsigned seed = 0; seed < kCases; ++seed) {
      std::mt19937 rng(seed);
      Polynomial a = oracle::random_polynomial(rng, c, 4, 4);
      Polynomial b = oracle::random_polynomial(rng, c, 4, 4);
      Polynomial d = oracle::random_polynomial(rng, c, 4, 4);
      INFO(seed_note(seed));
      CHECK(c->mul(c->mul(a, b), d) == c->mul(a, c->mul(b, d)));
      CHECK(c->mul(a, c->add(b, d)) == c->add(c->mul(a, b), c->mul(a, d)));
      CHECK(c->mul(a, b) == c->mul(b, a));
      CHECK(c->reduce(c->reduce(a * b)) == c->reduce(a * b));
    }
  }

  TEST_CASE("ring maps are homomorphisms") {
    RingPtr base = free_ring({"x", "y"});
    RingPtr line = free_ring({"t"});
    RingMap phi(base, line, {line->parse("t^2"), line->parse("t^3")});
    for (unsigned seed = 0; seed < kCases; ++seed) {
      std::mt19937 rng(seed);
      Polynomial f = oracle::random_polynomial(rng, base, 4, 4);
      Polynomial g = oracle::random_polynomial(rng, base, 4, 4);
      INFO(seed_note(seed));
      CHECK(phi.apply(f * g) == phi.apply(f) * phi.apply(g));
      CHECK(phi.apply(f + g) == phi.apply(f) + phi.apply(g));
      std::vector<Rational> pt = oracle::random_point(rng, 1);
      std::vector<Rational> img{pt[0] * pt[0], pt[0] * pt[0] * pt[0]};
      CHECK(phi.apply(f).evaluate(pt) == f.evaluate(img));
    }
  }

  TEST_CASE("groebner bases are deterministic") {
    for (unsigned seed = 0; seed < kCases; ++seed) CHECK_MESSAGE(cases::gb_determinism(seed), seed_note(seed));
  }

  TEST_CASE("saturation stabilizes at its exponent") {
    for (unsigned seed = 0; seed < kCases; ++seed) CHECK_MESSAGE(cases::saturation_stabilizes(seed), seed_note(seed));
  }

  TEST_CASE("syzygy columns annihilate the generators") {
    for (unsigned seed = 0; seed < kCases; ++seed) CHECK_MESSAGE(cases::syzygy_exactness(seed), seed_note(seed));
  }

  TEST_CASE("resolution maps compose to zero") {
    for (unsigned seed = 0; seed < kCases; ++seed) CHECK_MESSAGE(cases::resolution_composes(seed), seed_note(seed));
  }

  TEST_CASE("monomial ideal membership matches the staircase") {
    int members = 0;
    for (unsigned seed = 0; seed < kCases; ++seed) {
      cases::MembershipCase c = cases::monomial_membership(seed);
      members += c.member;
      CHECK_MESSAGE(c.agrees, seed_note(seed));
    }
    CHECK(members > 0);
  }
}
