// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "property_cases.hpp"
#include "sheafforge/golden.hpp"
#include "sheafforge/linspace.hpp"
#include "sheafforge/modification.hpp"

using namespace sheafforge;

namespace {

struct Result {
  bool ok = false;
  std::string detail;
};

Presentation ideal_on(const RingPtr& r, const std::vector<std::string>& g) {
  std::vector<Polynomial> gens;
  for (const std::string& s : g) gens.push_back(r->parse(s));
  return presentation_of_ideal(r, gens);
}

bool same(const Ideal& a, const RingPtr& r, const std::vector<std::string>& g) {
  return ideal_equal(a, Ideal::parse(r, g));
}

Result blowup_chain() {
  Modification m = blowup_origin(2);
  Presentation s = ideal_on(m.base, {"x^3", "y^3"});
  Ideal transform = pushforward_ideal(transform_ideals(Ideal(m.base, *s.ideal_generators()), m), m);
  SectionsResult sec = truncated_global_sections(pullback(s, m), m, 6);
  Ideal sheaf = Ideal::parse(m.base, {"x^3", "y^3"});
  bool t_ok = same(transform, m.base, {"x^3", "x^2*y", "x*y^2", "y^3"});
  bool s_ok = same(sec.image, m.base, {"x^3", "x^2*y^2", "y^3"}) && sec.stable;
  Polynomial w1 = m.base->parse("x^2*y"), w2 = m.base->parse("x^2*y^2");
  bool strict = transform.contains(w1) && !sec.image.contains(w1) && sec.image.contains(w2) && !sheaf.contains(w2);
  bool chain = sec.image.contains(sheaf) && transform.contains(sec.image);
  std::ostringstream os;
  os << "transform " << (t_ok ? "ok" : "WRONG") << ", sections " << (s_ok ? "ok (stable at D = 6)" : "WRONG")
     << ", strict witnesses " << (strict ? "ok" : "WRONG");
  return {t_ok && s_ok && strict && chain, os.str()};
}

Result nonreduced_linear_space() {
  Presentation p = ideal_on(free_ring({"x", "y"}), {"x^2", "x*y^2", "y^4"});
  int mu = min_generators_at(p, {Rational(0), Rational(0)});
  int corank = mu - generic_rank(p);
  LinearSpaceIdeal l = linear_space_ideal(p);
  bool j_ok = same(l.ideal, l.joint_ring, {"y^2*z1 - x*z2", "y^2*z2 - x*z3"});
  ReducednessVerdict v = reducedness_witness(l.ideal, l.joint_ring->parse("y*(z2^2 - z1*z3)"), 2);
  PrimaryComponentIdeal pc = primary_component(l);
  bool pc_ok = same(pc.ideal, l.joint_ring, {"y^2*z1 - x*z2", "y^2*z2 - x*z3", "z2^2 - z1*z3"});
  bool linear = pc_is_linear(pc);
  std::ostringstream os;
  os << "mu = " << mu << ", corank " << corank << ", J " << (j_ok ? "ok" : "WRONG") << ", g^2 witness "
     << (v.confirmed ? "ok" : "WRONG") << ", PC " << (pc_ok ? "ok" : "WRONG") << ", PC linear " << linear;
  return {mu == 3 && corank == 2 && j_ok && v.confirmed && !v.g_in_j && v.gk_in_j && pc_ok && !linear, os.str()};
}

Result maximal_ideal_transform() {
  Modification m = blowup_origin(2);
  Presentation mm = ideal_on(m.base, {"x", "y"});
  std::vector<ChartTransform> t = torsion_free_pullback(mm, m);
  bool charts_ok = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    charts_ok = charts_ok && t[i].transform_ideal && ideal_equal(*t[i].transform_ideal, m.charts[i].exceptional);
  }
  Ideal push = pushforward_ideal(transform_ideals(Ideal(m.base, *mm.ideal_generators()), m), m);
  bool push_ok = same(push, m.base, {"x", "y"});
  LinearSpaceIdeal l = linear_space_ideal(mm);
  Polynomial h = l.joint_ring->parse("y*z1 - x*z2");
  bool normal = ideal_equal(l.ideal, Ideal(l.joint_ring, {h})) && is_normal_hypersurface(l.joint_ring, h);
  std::ostringstream os;
  os << "charts " << (charts_ok ? "exceptional" : "WRONG") << ", pushforward " << (push_ok ? "(x, y)" : "WRONG")
     << ", y*z1 - x*z2 " << (normal ? "normal" : "NOT normal");
  return {charts_ok && push_ok && normal, os.str()};
}

Result canonical_divisor() {
  DivisorOnBlowup d2 = canonical_multiplicity(blowup_origin(2));
  DivisorOnBlowup d3 = canonical_multiplicity(blowup_origin(3));
  TopFormsReport top = verify_injection_chain_top_forms(blowup_origin(2));
  bool ok = d2.multiplicity == std::vector<int>{1, 1} && d3.multiplicity == std::vector<int>{2, 2, 2} && top.holds() &&
            top.divisor.multiplicity == std::vector<int>{1, 1};
  return {ok, std::string("n = 2: 1 per chart, n = 3: 2 per chart, top forms D = E: ") + (ok ? "ok" : "WRONG")};
}

Result cusp_normalization_check() {
  Modification m = cusp_normalization();
  Presentation o_hat = cusp_normalization_module();
  TorsionResult t = torsion_submodule(pushforward_finite(pullback(o_hat, m).front(), m));
  Ideal origin = Ideal::parse(m.base, {"x", "y"});
  bool torsion = !t.torsion_generators.empty();
  for (const Polynomial& w : t.witnesses) torsion = torsion && radical_membership(w, origin);
  Presentation strict = pushforward_finite(torsion_free_pullback(o_hat, m).front().presentation, m);
  bool tf = is_torsion_free(strict);
  Vec e0(strict.num_generators(), m.base->zero()), e1 = e0;
  e0[0] = m.base->one();
  e1[1] = m.base->one();
  ModuleMap f{o_hat, strict, {e0, e1}};
  bool iso = is_injective(f) && is_surjective(f);
  std::ostringstream os;
  os << "total transform torsion at origin " << (torsion ? "ok" : "WRONG") << ", strict transform "
     << (tf ? "torsion-free" : "HAS torsion") << ", isomorphic to O-hat " << (iso ? "yes" : "NO");
  return {torsion && tf && iso, os.str()};
}

Result decision_procedure() {
  RingPtr r = free_ring({"x", "y"});
  std::vector<Rational> o{Rational(0), Rational(0)};
  ClassifyReport m = classify_sheaf(ideal_on(r, {"x", "y"}), o);
  ClassifyReport n = classify_sheaf(ideal_on(r, {"x^2", "x*y^2", "y^4"}), o);
  bool m_ok = m.rank == 1 && m.corank_at_point == 1 && m.sing_codim == 2 && m.is_torsion_free && m.hom_dim_le_1 &&
              m.hypotheses_hold && m.thm12_consistent == true;
  bool n_ok = n.corank_at_point == 2 && n.sing_codim == 2 && !n.hypotheses_hold && !n.thm12_consistent.has_value();
  return {m_ok && n_ok, std::string("(x, y) -> (1, 1, 2, true, true) ") + (m_ok ? "ok" : "WRONG") +
                            "; (x^2, x*y^2, y^4) hypothesis failure " + (n_ok ? "flagged" : "NOT flagged")};
}

Result functor_properties() {
  Modification m = blowup_origin(2);
  const RingPtr& r = m.base;
  Presentation mm = ideal_on(r, {"x", "y"});
  ModuleMap inc{mm, Presentation::free(r, 1), {Vec{r->var(0)}, Vec{r->var(1)}}};
  ModuleMap proj{Presentation::free(r, 2), mm, {Vec{r->one(), r->zero()}, Vec{r->zero(), r->one()}}};
  bool mono = is_injective(inc), epi = is_surjective(proj);
  for (const ModuleMap& f : torsion_free_pullback(inc, m)) mono = mono && is_injective(f);
  for (const ModuleMap& f : torsion_free_pullback(proj, m)) epi = epi && is_surjective(f);
  bool zero = true;
  for (const ChartTransform& t : torsion_free_pullback(Presentation(r, 1, {Vec{r->var(0)}, Vec{r->var(1)}}), m)) {
    zero = zero && Submodule(t.presentation.ring(), 1, t.presentation.relations()).contains(t.presentation.basis_vector(0));
  }
  return {mono && epi && zero, std::string("mono ") + (mono ? "kept" : "LOST") + ", epi " + (epi ? "kept" : "LOST") +
                                   ", transform of O/m " + (zero ? "zero" : "NONZERO")};
}

Result tensor_torsion() {
  RingPtr r = free_ring({"z", "w"});
  Presentation t = tensor_presentation(ideal_on(r, {"z^2", "z*w"}), ideal_on(r, {"w^2", "z*w"}));
  TorsionResult tor = torsion_submodule(t);
  Vec cls{r->one(), r->zero(), r->zero(), r->constant(-1)};
  std::vector<Vec> span = t.relations();
  for (const FreeElement& g : tor.torsion_generators) span.push_back(g.coords);
  Submodule image(r, 4, t.relations());
  bool has = !image.contains(cls) && Submodule(r, 4, span).contains(cls) && image.contains(scale_vec(r->var(0), cls));
  bool witness = false;
  for (const Polynomial& w : tor.witnesses) witness = witness || r->equal(w, r->var(0));

  Modification m = blowup_origin(2);
  Presentation mm = ideal_on(m.base, {"x", "y"});
  std::vector<ChartTransform> whole = torsion_free_pullback(tensor_presentation(mm, mm), m);
  std::vector<ChartTransform> one = torsion_free_pullback(mm, m);
  bool compat = true;
  for (std::size_t i = 0; i < m.charts.size(); ++i) {
    Presentation q = torsion_submodule(tensor_presentation(one[i].presentation, one[i].presentation)).quotient;
    compat = compat && same_submodule(m.charts[i].ring, q.num_generators(), q.relations(), whole[i].presentation.relations());
  }
  return {has && witness && compat, std::string("torsion class ") + (has ? "found" : "MISSING") + ", witness z " +
                                        (witness ? "ok" : "WRONG") + ", chart compatibility " + (compat ? "ok" : "FAILS")};
}

Result kernel_properties() {
  int failures = 0;
  for (unsigned seed = 0; seed < cases::kCases; ++seed) {
    failures += !cases::gb_determinism(seed);
    failures += !cases::saturation_stabilizes(seed);
    failures += !cases::syzygy_exactness(seed);
    failures += !cases::resolution_composes(seed);
    failures += !cases::monomial_membership(seed).agrees;
  }
  return {failures == 0, std::to_string(5 * cases::kCases) + " cases, " + std::to_string(failures) + " failures"};
}

struct Criterion {
  int number;
  std::string name;
  double limit_ms;  // 0: no limit
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "blow-up chain for (x^3, y^3)", 10000, blowup_chain},
      {2, "non-reduced linear space of (x^2, x*y^2, y^4)", 5000, nonreduced_linear_space},
      {3, "transform and pushforward of the maximal ideal", 5000, maximal_ideal_transform},
      {4, "canonical divisor multiplicities", 5000, canonical_divisor},
      {5, "cusp normalization", 10000, cusp_normalization_check},
      {6, "hom-dim decision procedure", 0, decision_procedure},
      {7, "transform keeps monos and epis", 0, functor_properties},
      {8, "tensor product torsion", 10000, tensor_torsion},
      {9, "kernel property suite", 120000, kernel_properties},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    bool ok = r.ok && in_time;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.0f ms", ms);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " | " << r.detail << " | "
              << timing << (in_time ? "" : " (over the time limit)") << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
