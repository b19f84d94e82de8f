#include "doctest.h"
#include "sheafforge/golden.hpp"
#include "sheafforge/modification.hpp"

using namespace sheafforge;

namespace {

Presentation on_base(const Modification& m, const std::vector<std::string>& g) {
  std::vector<Polynomial> gens;
  for (const std::string& s : g) gens.push_back(m.base->parse(s));
  return presentation_of_ideal(m.base, gens);
}

}  // namespace

TEST_SUITE("modification") {
  TEST_CASE("plane blow-up charts") {
    Modification m = blowup_origin(2);
    REQUIRE(m.charts.size() == 2);
    CHECK(m.charts[0].ring->names() == std::vector<std::string>{"x", "t"});
    CHECK(m.charts[1].ring->names() == std::vector<std::string>{"s", "y"});
    CHECK(m.charts[0].to_base.apply(m.base->parse("y")) == m.charts[0].ring->parse("x*t"));
    CHECK(m.charts[1].to_base.apply(m.base->parse("x")) == m.charts[1].ring->parse("s*y"));
    CHECK(*m.charts[0].exceptional_var == 0);
    CHECK(*m.charts[1].exceptional_var == 1);
  }

  TEST_CASE("subspace blow-up keeps the other coordinates") {
    Modification m = blowup_coordinate_subspace(3, 2);
    REQUIRE(m.charts.size() == 2);
    CHECK(m.charts[0].ring->names() == std::vector<std::string>{"x", "t2", "z"});
    CHECK(m.charts[0].to_base.apply(m.base->parse("z")) == m.charts[0].ring->parse("z"));
    CHECK_THROWS_AS(blowup_coordinate_subspace(2, 3), std::invalid_argument);
  }

  TEST_CASE("overlap transfer") {
    Modification m = blowup_origin(2);
    const Overlap& o = m.charts[0].overlaps.at(0);
    Polynomial f = m.charts[0].ring->parse("x*t^2");  // = x t^2 with x = s y, t = 1/s
    CHECK(transfer_power(o, f) == 2);
    CHECK(transfer(o, f, 2, *m.charts[1].ring) == m.charts[1].ring->parse("s*y"));
    CHECK(transfer(o, f, 3, *m.charts[1].ring) == m.charts[1].ring->parse("s^2*y"));
    CHECK_THROWS(transfer(o, f, 1, *m.charts[1].ring));
  }

  TEST_CASE("pullback of (x^3, y^3)") {
    Modification m = blowup_origin(2);
    std::vector<Presentation> pb = pullback(on_base(m, {"x^3", "y^3"}), m);
    const RingPtr& c = m.charts[0].ring;
    CHECK(pb[0].column(0) == Vec{c->parse("x^3*t^3"), c->parse("-x^3")});
  }

  TEST_CASE("transforms of (x^3, y^3)") {
    Modification m = blowup_origin(2);
    std::vector<ChartTransform> t = torsion_free_pullback(on_base(m, {"x^3", "y^3"}), m);
    CHECK(ideal_equal(*t[0].transform_ideal, Ideal::parse(m.charts[0].ring, {"x^3"})));
    CHECK(ideal_equal(*t[1].transform_ideal, Ideal::parse(m.charts[1].ring, {"y^3"})));
    CHECK(t[0].transform_matches);
    CHECK(t[1].transform_matches);
    CHECK_FALSE(t[0].torsion.empty());
  }

  TEST_CASE("contraction") {
    Modification m = blowup_origin(2);
    const Chart& c = m.charts[0];
    CHECK(ideal_equal(contraction(Ideal(c.ring, {c.ring->var(0)}), c.to_base), Ideal::parse(m.base, {"x", "y"})));
  }

  TEST_CASE("pushforward of the transform") {
    Modification m = blowup_origin(2);
    Ideal s = Ideal::parse(m.base, {"x^3", "y^3"});
    std::vector<Ideal> charts = transform_ideals(s, m);
    CHECK(charts_compatible(charts, m));
    CHECK(ideal_equal(pushforward_ideal(charts, m), Ideal::parse(m.base, {"x^3", "x^2*y", "x*y^2", "y^3"})));
  }

  TEST_CASE("incompatible chart ideals are rejected") {
    Modification m = blowup_origin(2);
    std::vector<Ideal> charts{Ideal::parse(m.charts[0].ring, {"x"}), Ideal::unit(m.charts[1].ring)};
    CHECK_FALSE(charts_compatible(charts, m));
    CHECK_THROWS_AS(pushforward_ideal(charts, m), std::invalid_argument);
  }

  TEST_CASE("sections of the pullback") {
    Modification m = blowup_origin(2);
    std::vector<Presentation> pb = pullback(on_base(m, {"x^3", "y^3"}), m);
    SectionsResult r = truncated_global_sections(pb, m, 6);
    CHECK(r.stable);
    CHECK(ideal_equal(r.image, Ideal::parse(m.base, {"x^3", "x^2*y^2", "y^3"})));
    SectionsResult strict = truncated_global_sections(pb, m, 6, SectionsMode::kStrict);
    CHECK(ideal_equal(strict.image, Ideal::parse(m.base, {"x^3", "y^3"})));
  }

  TEST_CASE("sections of chart ideals agree with the pushforward") {
    Modification m = blowup_origin(2);
    std::vector<Ideal> charts = transform_ideals(Ideal::parse(m.base, {"x^3", "y^3"}), m);
    SectionsResult r = truncated_global_sections(charts, m, 6);
    CHECK(r.stable);
    CHECK(ideal_equal(r.image, pushforward_ideal(charts, m)));
  }

  TEST_CASE("injection chain") {
    Modification m = blowup_origin(2);
    ChainReport c = verify_injection_chain(on_base(m, {"x^3", "y^3"}), m, 6);
    CHECK(c.holds());
    CHECK(c.first_strict);
    CHECK(c.second_strict);
    CHECK(m.base->format(*c.first_witness) == "x^2*y^2");
    CHECK(m.base->format(*c.second_witness) == "x^2*y");
  }

  TEST_CASE("canonical multiplicities") {
    CHECK(canonical_multiplicity(blowup_origin(2)).multiplicity == std::vector<int>{1, 1});
    CHECK(canonical_multiplicity(blowup_origin(3)).multiplicity == std::vector<int>{2, 2, 2});
    CHECK(canonical_multiplicity(blowup_coordinate_subspace(3, 1)).multiplicity == std::vector<int>{0});
    CHECK(canonical_multiplicity(blowup_coordinate_subspace(4, 3)).multiplicity == std::vector<int>{2, 2, 2});
    CHECK_THROWS(canonical_multiplicity(cusp_normalization()));
  }

  TEST_CASE("top forms") {
    TopFormsReport r = verify_injection_chain_top_forms(blowup_origin(2));
    CHECK(r.holds());
    CHECK(r.divisor.multiplicity == std::vector<int>{1, 1});
  }

  TEST_CASE("variable order") {
    RingPtr r = free_ring({"x", "y"});
    CHECK(variable_order(r->parse("x^2*y + x^3"), 0) == 2);
    CHECK(variable_order(r->parse("x^2*y + 1"), 0) == 0);
  }

  TEST_CASE("cusp normalization") {
    Modification m = cusp_normalization();
    Presentation o_hat = cusp_normalization_module();
    Presentation total = pushforward_finite(pullback(o_hat, m).front(), m);
    CHECK(total.num_generators() == 4);
    TorsionResult t = torsion_submodule(total);
    CHECK_FALSE(t.torsion_generators.empty());
    Presentation strict = pushforward_finite(torsion_free_pullback(o_hat, m).front().presentation, m);
    CHECK(is_torsion_free(strict));
    CHECK_THROWS_AS(pushforward_finite(o_hat, blowup_origin(2)), std::invalid_argument);
  }

  TEST_CASE("transform of the residue field vanishes") {
    Modification m = blowup_origin(2);
    Presentation k(m.base, 1, {Vec{m.base->var(0)}, Vec{m.base->var(1)}});
    for (const ChartTransform& t : torsion_free_pullback(k, m)) {
      Submodule rel(t.presentation.ring(), 1, t.presentation.relations());
      CHECK(rel.contains(t.presentation.basis_vector(0)));
    }
  }
}
