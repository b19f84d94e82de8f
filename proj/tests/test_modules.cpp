#include "doctest.h"
#include "oracles.hpp"
#include "sheafforge/module.hpp"

using namespace sheafforge;

namespace {

RingPtr plane() { return free_ring({"x", "y"}); }

Presentation ideal_sheaf(const RingPtr& r, const std::vector<std::string>& g) {
  std::vector<Polynomial> gens;
  for (const std::string& s : g) gens.push_back(r->parse(s));
  return presentation_of_ideal(r, gens);
}

const std::vector<Rational> kOrigin{Rational(0), Rational(0)};

}  // namespace

TEST_SUITE("modules") {
  TEST_CASE("presentation of the non-reduced example") {
    RingPtr r = plane();
    Presentation p = ideal_sheaf(r, {"x^2", "x*y^2", "y^4"});
    CHECK(p.num_generators() == 3);
    REQUIRE(p.num_relations() == 2);
    for (const Vec& c : p.relations()) CHECK(oracle::annihilates(r, *p.ideal_generators(), c));
    CHECK(p.column(0) == Vec{r->parse("y^2"), r->parse("-x"), r->zero()});
    CHECK(min_generators_at(p, kOrigin) == 3);
    CHECK(generic_rank(p) == 1);
  }

  TEST_CASE("min generators away from the origin") {
    RingPtr r = plane();
    Presentation p = ideal_sheaf(r, {"x", "y"});
    CHECK(min_generators_at(p, kOrigin) == 2);
    CHECK(min_generators_at(p, {Rational(1), Rational(0)}) == 1);
  }

  TEST_CASE("fitting ideals") {
    RingPtr r = plane();
    Presentation p = ideal_sheaf(r, {"x", "y"});
    CHECK(ideal_equal(fitting_ideal(p, 0), Ideal::zero(r)));
    CHECK(ideal_equal(fitting_ideal(p, 1), Ideal::parse(r, {"x", "y"})));
    CHECK(fitting_ideal(p, 2).is_unit());
  }

  TEST_CASE("syzygies of a regular sequence are Koszul") {
    RingPtr r = free_ring({"x", "y", "z"});
    Presentation s = syzygies(r, 1, {Vec{r->parse("x")}, Vec{r->parse("y")}, Vec{r->parse("z")}});
    CHECK(s.num_relations() == 3);
    for (const Vec& c : s.relations()) CHECK(oracle::annihilates(r, {r->var(0), r->var(1), r->var(2)}, c));
  }

  TEST_CASE("torsion-free ideal sheaves") {
    RingPtr r = plane();
    CHECK(is_torsion_free(ideal_sheaf(r, {"x", "y"})));
    CHECK(is_torsion_free(ideal_sheaf(r, {"x^3", "y^3"})));
  }

  TEST_CASE("residue field is all torsion") {
    RingPtr r = plane();
    Presentation k(r, 1, {Vec{r->var(0)}, Vec{r->var(1)}});
    TorsionResult t = torsion_submodule(k);
    CHECK(t.whole_module);
    CHECK_FALSE(t.torsion_generators.empty());
    CHECK(generic_rank(k) == 0);
  }

  TEST_CASE("torsion with a witness") {
    // O^2 / (x e1): e1 is torsion, killed by x
    RingPtr r = plane();
    Presentation p(r, 2, {Vec{r->var(0), r->zero()}});
    TorsionResult t = torsion_submodule(p);
    REQUIRE(t.torsion_generators.size() == 1);
    CHECK(r->equal(t.witnesses[0], r->var(0)));
    CHECK(is_torsion_free(t.quotient));
  }

  TEST_CASE("tensor product torsion") {
    RingPtr r = free_ring({"z", "w"});
    Presentation a = ideal_sheaf(r, {"z^2", "z*w"});
    Presentation b = ideal_sheaf(r, {"w^2", "z*w"});
    Presentation t = tensor_presentation(a, b);
    CHECK(t.num_generators() == 4);
    TorsionResult tor = torsion_submodule(t);
    REQUIRE(tor.torsion_generators.size() == 1);
    Submodule image(r, 4, t.relations());
    Vec cls{r->one(), r->zero(), r->zero(), r->constant(-1)};
    CHECK_FALSE(image.contains(cls));
    CHECK(image.contains(scale_vec(r->var(0), cls)));
    CHECK(r->equal(tor.witnesses[0], r->var(0)));
  }

  TEST_CASE("singular locus") {
    RingPtr r = plane();
    SingularLocus s = singular_locus(ideal_sheaf(r, {"x", "y"}));
    CHECK(ideal_equal(s.ideal, Ideal::parse(r, {"x", "y"})));
    CHECK(s.info.codim == 2);
    CHECK_FALSE(s.torsion_adjusted);
  }

  TEST_CASE("classify the maximal ideal") {
    ClassifyReport c = classify_sheaf(ideal_sheaf(plane(), {"x", "y"}), kOrigin);
    CHECK(c.rank == 1);
    CHECK(c.corank_at_point == 1);
    CHECK(c.sing_codim == 2);
    CHECK(c.is_torsion_free);
    CHECK(c.hom_dim_le_1);
    CHECK(c.hypotheses_hold);
    REQUIRE(c.thm12_consistent.has_value());
    CHECK(*c.thm12_consistent);
  }

  TEST_CASE("classify flags failing hypotheses") {
    ClassifyReport c = classify_sheaf(ideal_sheaf(plane(), {"x^2", "x*y^2", "y^4"}), kOrigin);
    CHECK(c.corank_at_point == 2);
    CHECK(c.sing_codim == 2);
    CHECK_FALSE(c.hypotheses_hold);
    CHECK_FALSE(c.thm12_consistent.has_value());
  }

  TEST_CASE("classify away from the origin") {
    ClassifyReport c = classify_sheaf(ideal_sheaf(plane(), {"x", "y"}), {Rational(1), Rational(2)});
    CHECK(c.corank_at_point == 0);
    CHECK(c.min_generators_at_point == 1);
  }

  TEST_CASE("hom-dim of the residue field in three variables") {
    RingPtr r = free_ring({"x", "y", "z"});
    Presentation k(r, 1, {Vec{r->var(0)}, Vec{r->var(1)}, Vec{r->var(2)}});
    auto h = hom_dim_le_1_at_origin(k);
    REQUIRE(h.has_value());
    CHECK_FALSE(*h);
    FreeResolution res = free_resolution(k, 8);
    CHECK(res.complete);
    CHECK(res.ranks == std::vector<std::size_t>{1, 3, 3, 1});
  }

  TEST_CASE("prune drops unit pivots") {
    RingPtr r = plane();
    Presentation p(r, 2, {Vec{r->one(), r->var(0)}, Vec{r->zero(), r->var(1)}});
    Presentation q = prune(p);
    CHECK(q.num_generators() == 1);
    CHECK(q.num_relations() == 1);
  }

  TEST_CASE("module maps") {
    RingPtr r = plane();
    Presentation m = ideal_sheaf(r, {"x", "y"});
    ModuleMap inc{m, Presentation::free(r, 1), {Vec{r->var(0)}, Vec{r->var(1)}}};
    CHECK(is_injective(inc));
    CHECK_FALSE(is_surjective(inc));
    ModuleMap proj{Presentation::free(r, 2), m, {Vec{r->one(), r->zero()}, Vec{r->zero(), r->one()}}};
    CHECK(is_surjective(proj));
    CHECK_FALSE(is_injective(proj));
    ModuleMap bad{Presentation::free(r, 1), Presentation(r, 1, {Vec{r->var(0)}}), {Vec{r->one()}}};
    CHECK(is_surjective(bad));
  }

  TEST_CASE("module saturation") {
    RingPtr r = plane();
    ModuleSaturation s = module_saturate(r, 1, {Vec{r->parse("x^2*y")}}, r->var(0));
    REQUIRE(s.generators.size() == 1);
    CHECK(r->format(s.generators[0][0]) == "y");
    CHECK(s.exponent == 2);
  }
}
