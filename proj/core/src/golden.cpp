#include "sheafforge/golden.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "sheafforge/linspace.hpp"

namespace sheafforge {

RingPtr cusp_ring() { return CoordinateRing::make({"x", "y"}, std::vector<std::string>{"x^3 - y^2"}); }

Modification cusp_normalization() {
  RingPtr line = free_ring({"t"});
  RingMap phi(cusp_ring(), line, {line->parse("t^2"), line->parse("t^3")});
  return finite_map(phi, {line->one(), line->var(0)});
}

Presentation cusp_normalization_module() {
  RingPtr r = cusp_ring();
  return Presentation(r, 2, {Vec{r->parse("-y"), r->parse("x")}, Vec{r->parse("-x^2"), r->parse("y")}});
}

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::kFail;
  std::string detail;
};

struct Check {
  std::string id;
  std::string anchor;
  std::function<Outcome(const GoldenOptions&)> run;
};

Outcome verdict(bool ok, std::string detail) { return {ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)}; }

Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) { return Ideal::parse(r, gens); }

std::string reduced_string(const Ideal& i) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const Polynomial& g : i.reduced_generators()) {
    os << (first ? "" : ", ") << i.ring()->format(g);
    first = false;
  }
  os << ")";
  return os.str();
}

// Mutual membership; on failure names the first generator that is missing.
std::string equality_gap(const Ideal& got, const Ideal& want) {
  for (const Polynomial& g : want.generators()) {
    if (!got.contains(g)) return want.ring()->format(g) + " not in computed ideal";
  }
  for (const Polynomial& g : got.generators()) {
    if (!want.contains(g)) return got.ring()->format(g) + " not in expected ideal";
  }
  return {};
}

Presentation nonreduced_sheaf() {
  RingPtr r = free_ring({"x", "y"});
  return presentation_of_ideal(r, {r->parse("x^2"), r->parse("x*y^2"), r->parse("y^4")});
}

Presentation maximal_ideal() {
  RingPtr r = free_ring({"x", "y"});
  return presentation_of_ideal(r, {r->var(0), r->var(1)});
}

Presentation on_blowup_base(const Modification& m, const std::vector<std::string>& gens) {
  std::vector<Polynomial> g;
  for (const std::string& s : gens) g.push_back(m.base->parse(s));
  return presentation_of_ideal(m.base, g);
}

// ---- non-reduced linear space -----------------------------------------------

Outcome nonreduced_min_generators(const GoldenOptions&) {
  ClassifyReport c = classify_sheaf(nonreduced_sheaf(), {0, 0});
  std::ostringstream os;
  os << "min generators at origin " << c.min_generators_at_point << ", rank " << c.rank << ", corank "
     << c.corank_at_point;
  return verdict(c.min_generators_at_point == 3 && c.rank == 1 && c.corank_at_point == 2, os.str());
}

Outcome nonreduced_linear_space(const GoldenOptions&) {
  LinearSpaceIdeal l = linear_space_ideal(nonreduced_sheaf());
  std::string gap = equality_gap(l.ideal, ideal_of(l.joint_ring, {"y^2*z1 - x*z2", "y^2*z2 - x*z3"}));
  return verdict(gap.empty(), gap.empty() ? "J_S = " + l.ideal.to_string() : gap);
}

Outcome nonreduced_witness(const GoldenOptions&) {
  LinearSpaceIdeal l = linear_space_ideal(nonreduced_sheaf());
  ReducednessVerdict v = reducedness_witness(l.ideal, l.joint_ring->parse("y*(z2^2 - z1*z3)"), 2);
  return verdict(v.confirmed, v.detail);
}

Outcome nonreduced_primary_component(const GoldenOptions& o) {
  LinearSpaceIdeal l = linear_space_ideal(nonreduced_sheaf());
  PrimaryComponentIdeal pc = primary_component(l);
  Ideal computed = pc.ideal;
  if (o.inject_saturation_fault) {
    std::vector<Ideal> parts;
    for (const Polynomial& g : pc.saturating_ideal.generators()) {
      Polynomial e = l.embed(g);
      int k = saturate(l.ideal, e).exponent;
      parts.push_back(quotient_power(l.ideal, e, std::max(0, k - 1)));
    }
    computed = intersect(parts);
  }
  Ideal want = ideal_of(l.joint_ring, {"y^2*z1 - x*z2", "y^2*z2 - x*z3", "z2^2 - z1*z3"});
  for (const Polynomial& g : want.generators()) {
    if (!computed.contains(g)) {
      return verdict(false, l.joint_ring->format(g) + " not in computed primary component");
    }
  }
  std::string gap = equality_gap(computed, want);
  return verdict(gap.empty(), gap.empty() ? "PC = " + reduced_string(computed) : gap);
}

Outcome nonreduced_pc_not_linear(const GoldenOptions&) {
  PrimaryComponentIdeal pc = primary_component(linear_space_ideal(nonreduced_sheaf()));
  bool linear = pc_is_linear(pc);
  return verdict(!linear, linear ? "primary component reported linear" : "z2^2 - z1*z3 has fiber degree 2");
}

// ---- hom-dim decision -------------------------------------------------------

std::string classify_tuple(const ClassifyReport& c) {
  std::ostringstream os;
  os << std::boolalpha << "(rank, corank, codim Sing, torsion-free, hom-dim<=1) = (" << c.rank << ", " << c.corank_at_point << ", "
     << c.sing_codim << ", " << c.is_torsion_free << ", " << c.hom_dim_le_1 << ")";
  return os.str();
}

Outcome classify_maximal(const GoldenOptions&) {
  ClassifyReport c = classify_sheaf(maximal_ideal(), {0, 0});
  bool ok = c.rank == 1 && c.corank_at_point == 1 && c.sing_codim == 2 && c.is_torsion_free && c.hom_dim_le_1 &&
            c.hypotheses_hold && c.thm12_consistent.value_or(false);
  return verdict(ok, classify_tuple(c) + (c.hypotheses_hold ? ", hypotheses hold" : ", hypotheses fail"));
}

Outcome classify_hypothesis_failure(const GoldenOptions&) {
  ClassifyReport c = classify_sheaf(nonreduced_sheaf(), {0, 0});
  bool ok = c.corank_at_point == 2 && c.sing_codim == 2 && !c.hypotheses_hold && !c.thm12_consistent;
  return verdict(ok, classify_tuple(c) + (c.thm12_consistent ? ", biconditional asserted" : ", biconditional not asserted"));
}

// ---- blow-up chain and cusp -------------------------------------------------

Outcome chain_transform_pushforward(const GoldenOptions&) {
  Modification m = blowup_origin(2);
  Ideal s = ideal_of(m.base, {"x^3", "y^3"});
  std::vector<Ideal> charts = transform_ideals(s, m);
  Ideal push = pushforward_ideal(charts, m);
  std::string gap = equality_gap(push, ideal_of(m.base, {"x^3", "x^2*y", "x*y^2", "y^3"}));
  return verdict(gap.empty(), gap.empty() ? "pi_* pi^T S = " + reduced_string(push) : gap);
}

Outcome chain_pullback_sections(const GoldenOptions& o) {
  Modification m = blowup_origin(2);
  SectionsResult r = truncated_global_sections(pullback(on_blowup_base(m, {"x^3", "y^3"}), m), m, o.degree_bound);
  std::string gap = equality_gap(r.image, ideal_of(m.base, {"x^3", "x^2*y^2", "y^3"}));
  std::ostringstream os;
  os << (gap.empty() ? "image " + reduced_string(r.image) : gap) << ", D = " << r.degree_bound
     << (r.stable ? ", stable" : ", not stable");
  return verdict(gap.empty() && r.stable, os.str());
}

Outcome chain_strict(const GoldenOptions& o) {
  Modification m = blowup_origin(2);
  ChainReport c = verify_injection_chain(on_blowup_base(m, {"x^3", "y^3"}), m, o.degree_bound);
  Polynomial w1 = m.base->parse("x^2*y^2"), w2 = m.base->parse("x^2*y");
  bool w1_ok = c.sections.contains(w1) && !c.sheaf.contains(w1);
  bool w2_ok = c.transform.contains(w2) && !c.sections.contains(w2);
  std::ostringstream os;
  os << "S < sections: " << (w1_ok ? "x^2*y^2 witnesses" : "witness x^2*y^2 rejected")
     << "; sections < transform: " << (w2_ok ? "x^2*y witnesses" : "witness x^2*y rejected");
  return verdict(c.holds() && c.first_strict && c.second_strict && w1_ok && w2_ok, os.str());
}

Outcome cusp_total_torsion(const GoldenOptions&) {
  Modification m = cusp_normalization();
  Presentation push = pushforward_finite(pullback(cusp_normalization_module(), m).front(), m);
  TorsionResult t = torsion_submodule(push);
  if (t.torsion_generators.empty()) return verdict(false, "pushforward of the pullback is torsion-free");
  Ideal origin = ideal_of(m.base, {"x", "y"});
  for (const Polynomial& w : t.witnesses) {
    if (!radical_membership(w, origin)) return verdict(false, "witness " + m.base->format(w) + " not supported at the origin");
  }
  std::ostringstream os;
  os << t.torsion_generators.size() << " torsion generators, witnesses in rad(x, y)";
  return verdict(true, os.str());
}

Outcome cusp_strict_transform(const GoldenOptions&) {
  Modification m = cusp_normalization();
  Presentation o_hat = cusp_normalization_module();
  Presentation push = pushforward_finite(torsion_free_pullback(o_hat, m).front().presentation, m);
  if (!is_torsion_free(push)) return verdict(false, "pushforward of the transform has torsion");
  // 1 -> g_{1,1}, w -> g_{1,t}
  Vec e0(push.num_generators(), m.base->zero()), e1 = e0;
  e0[0] = m.base->one();
  e1[1] = m.base->one();
  ModuleMap f{o_hat, push, {e0, e1}};
  bool inj = is_injective(f), surj = is_surjective(f);
  return verdict(inj && surj, std::string("torsion-free; map from O-hat is ") + (inj ? "injective" : "not injective") +
                                  " and " + (surj ? "surjective" : "not surjective"));
}

// ---- maximal ideal under the blow-up ----------------------------------------

Outcome maximal_transform_exceptional(const GoldenOptions&) {
  Modification m = blowup_origin(2);
  std::vector<ChartTransform> t = torsion_free_pullback(on_blowup_base(m, {"x", "y"}), m);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string gap = equality_gap(*t[i].transform_ideal, m.charts[i].exceptional);
    if (!gap.empty() || !t[i].transform_matches) return verdict(false, "chart " + std::to_string(i + 1) + ": " + gap);
  }
  return verdict(true, "pi^T (x, y) is the exceptional ideal on both charts");
}

Outcome maximal_pushforward(const GoldenOptions&) {
  Modification m = blowup_origin(2);
  Ideal mm = ideal_of(m.base, {"x", "y"});
  Ideal push = pushforward_ideal(transform_ideals(mm, m), m);
  std::string gap = equality_gap(push, mm);
  if (!gap.empty()) return verdict(false, gap);
  LinearSpaceIdeal l = linear_space_ideal(maximal_ideal());
  Polynomial h = l.joint_ring->parse("y*z1 - x*z2");
  std::string lgap = equality_gap(l.ideal, Ideal(l.joint_ring, {h}));
  if (!lgap.empty()) return verdict(false, "linear space: " + lgap);
  bool normal = is_normal_hypersurface(l.joint_ring, h);
  return verdict(normal, normal ? "pi_* pi^T (x, y) = (x, y); y*z1 - x*z2 normal" : "y*z1 - x*z2 reported not normal");
}

// ---- divisors ---------------------------------------------------------------

std::string multiplicities(const DivisorOnBlowup& d) {
  std::string s;
  for (int k : d.multiplicity) s += (s.empty() ? "" : ", ") + std::to_string(k);
  return "(" + s + ")";
}

Outcome top_forms_divisor(const GoldenOptions&) {
  Modification m = blowup_origin(2);
  TopFormsReport r = verify_injection_chain_top_forms(m);
  DivisorOnBlowup c = canonical_multiplicity(m);
  bool ok = r.holds() && r.divisor.multiplicity == std::vector<int>{1, 1} && c.multiplicity == r.divisor.multiplicity;
  return verdict(ok, "D = E with multiplicities " + multiplicities(r.divisor));
}

Outcome canonical_case(std::size_t n, int expected) {
  DivisorOnBlowup d = canonical_multiplicity(blowup_origin(n));
  bool ok = d.multiplicity == std::vector<int>(n, expected);
  return verdict(ok, "n = " + std::to_string(n) + ": " + multiplicities(d));
}

// ---- tensor products --------------------------------------------------------

Outcome tensor_torsion(const GoldenOptions&) {
  RingPtr r = free_ring({"z", "w"});
  Presentation a = presentation_of_ideal(r, {r->parse("z^2"), r->parse("z*w")});
  Presentation b = presentation_of_ideal(r, {r->parse("w^2"), r->parse("z*w")});
  Presentation t = tensor_presentation(a, b);
  TorsionResult tor = torsion_submodule(t);
  // z^2 (x) w^2 - zw (x) zw
  Vec v{r->one(), r->zero(), r->zero(), r->constant(-1)};
  Submodule image(r, 4, t.relations());
  std::vector<Vec> span = t.relations();
  for (const FreeElement& g : tor.torsion_generators) span.push_back(g.coords);
  bool nonzero = !image.contains(v);
  bool in_torsion = Submodule(r, 4, span).contains(v);
  bool killed = image.contains(scale_vec(r->var(0), v));
  bool witness = std::any_of(tor.witnesses.begin(), tor.witnesses.end(), [&](const Polynomial& p) { return r->equal(p, r->var(0)); });
  std::ostringstream os;
  os << "class " << (nonzero ? "nonzero" : "zero") << ", " << (in_torsion ? "in" : "not in") << " torsion, z kills it: "
     << (killed ? "yes" : "no") << ", witness z: " << (witness ? "yes" : "no");
  return verdict(nonzero && in_torsion && killed && witness, os.str());
}

Outcome tensor_compat(const GoldenOptions&) {
  Modification m = blowup_origin(2);
  Presentation p = on_blowup_base(m, {"x", "y"});
  std::vector<ChartTransform> whole = torsion_free_pullback(tensor_presentation(p, p), m);
  std::vector<ChartTransform> single = torsion_free_pullback(p, m);
  for (std::size_t i = 0; i < m.charts.size(); ++i) {
    Presentation prod = tensor_presentation(single[i].presentation, single[i].presentation);
    Presentation tf = torsion_submodule(prod).quotient;
    const RingPtr& r = m.charts[i].ring;
    if (!same_submodule(r, tf.num_generators(), tf.relations(), whole[i].presentation.relations())) {
      return verdict(false, "chart " + std::to_string(i + 1) + ": presentations differ");
    }
  }
  return verdict(true, "pi^T(m (x) m) = pi^T m (x) pi^T m on both charts");
}

// ---- transform functor ------------------------------------------------------

Outcome transform_mono(const GoldenOptions&) {
  Modification m = blowup_origin(2);
  const RingPtr& r = m.base;
  ModuleMap inc{on_blowup_base(m, {"x", "y"}), Presentation::free(r, 1), {Vec{r->var(0)}, Vec{r->var(1)}}};
  if (!is_injective(inc)) return verdict(false, "m -> O not injective on the base");
  std::vector<ModuleMap> charts = torsion_free_pullback(inc, m);
  for (std::size_t i = 0; i < charts.size(); ++i) {
    if (!is_injective(charts[i])) return verdict(false, "chart " + std::to_string(i + 1) + ": kernel nonzero");
  }
  return verdict(true, "kernel = 0 on base and both charts");
}

Outcome transform_epi(const GoldenOptions&) {
  Modification m = blowup_origin(2);
  const RingPtr& r = m.base;
  ModuleMap proj{Presentation::free(r, 2), on_blowup_base(m, {"x", "y"}),
                 {Vec{r->one(), r->zero()}, Vec{r->zero(), r->one()}}};
  if (!is_surjective(proj)) return verdict(false, "O^2 -> m not surjective on the base");
  std::vector<ModuleMap> charts = torsion_free_pullback(proj, m);
  for (std::size_t i = 0; i < charts.size(); ++i) {
    if (!is_surjective(charts[i])) return verdict(false, "chart " + std::to_string(i + 1) + ": cokernel nonzero");
  }
  return verdict(true, "cokernel = 0 on base and both charts");
}

Outcome transform_residue(const GoldenOptions&) {
  Modification m = blowup_origin(2);
  const RingPtr& r = m.base;
  Presentation residue(r, 1, {Vec{r->var(0)}, Vec{r->var(1)}});
  std::vector<ChartTransform> t = torsion_free_pullback(residue, m);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Presentation& q = t[i].presentation;
    Submodule rel(q.ring(), q.num_generators(), q.relations());
    for (std::size_t k = 0; k < q.num_generators(); ++k) {
      if (!rel.contains(q.basis_vector(k))) return verdict(false, "chart " + std::to_string(i + 1) + ": transform nonzero");
    }
  }
  return verdict(true, "pi^T(O/m) = 0 on both charts");
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"rem-3.3-min-generators", "Rem 3.3", nonreduced_min_generators},
      {"rem-3.3-linear-space", "Rem 3.3", nonreduced_linear_space},
      {"rem-3.3-nonreduced", "Rem 3.3", nonreduced_witness},
      {"rem-3.3-primary-component", "Rem 3.3", nonreduced_primary_component},
      {"rem-3.3-pc-not-linear", "Rem 3.3", nonreduced_pc_not_linear},
      {"thm-1.2-classify-m", "Thm 1.2", classify_maximal},
      {"thm-1.2-hypothesis-failure", "Thm 1.2", classify_hypothesis_failure},
      {"rem-4.2-transform-pushforward", "Rem 4.2", chain_transform_pushforward},
      {"rem-4.2-pullback-sections", "Rem 4.2", chain_pullback_sections},
      {"rem-4.2-chain", "Rem 4.2", chain_strict},
      {"rem-4.2-cusp-torsion", "Rem 4.2", cusp_total_torsion},
      {"rem-4.2-cusp-transform", "Rem 4.2", cusp_strict_transform},
      {"lem-7.2-exceptional", "Lem 7.2", maximal_transform_exceptional},
      {"eq-7.3-pushforward", "Eq. 7.3", maximal_pushforward},
      {"rem-5.2-divisor", "Rem 5.2", top_forms_divisor},
      {"sec-8-canonical-n2", "§8", [](const GoldenOptions&) { return canonical_case(2, 1); }},
      {"sec-8-canonical-n3", "§8", [](const GoldenOptions&) { return canonical_case(3, 2); }},
      {"lem-8.2-footnote-torsion", "Lem 8.2 footnote", tensor_torsion},
      {"lem-8.2-tensor-compat", "Lem 8.2", tensor_compat},
      {"sec-6-mono", "§6", transform_mono},
      {"sec-6-epi", "§6", transform_epi},
      {"sec-6-quotient", "§6", transform_residue},
  };
  return all;
}

bool selected(const std::string& id, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  return std::any_of(only.begin(), only.end(), [&](const std::string& p) { return id.rfind(p, 0) == 0; });
}

CheckRecord run_check(const Check& c, const GoldenOptions& o) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord rec{c.id, c.anchor, CheckStatus::kFail, {}, 0};
  try {
    Outcome out = c.run(o);
    rec.status = out.status;
    rec.detail = std::move(out.detail);
  } catch (const std::exception& e) {
    rec.detail = std::string("error: ") + e.what();
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace

std::vector<std::string> golden_check_ids() {
  std::vector<std::string> out;
  for (const Check& c : checks()) out.push_back(c.id);
  return out;
}

Report verify_paper(const GoldenOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "verify-paper";
  for (const std::string& p : options.only) rep.command += " --only " + p;
  std::vector<const Check*> todo;
  for (const Check& c : checks()) {
    if (selected(c.id, options.only)) todo.push_back(&c);
  }
  if (options.parallel) {
    std::vector<std::future<CheckRecord>> futures;
    for (const Check* c : todo) futures.push_back(std::async(std::launch::async, run_check, std::cref(*c), std::cref(options)));
    for (auto& f : futures) rep.checks.push_back(f.get());
  } else {
    for (const Check* c : todo) rep.checks.push_back(run_check(*c, options));
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return std::tie(a.anchor, a.id) < std::tie(b.anchor, b.id); });
  rep.total_millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace sheafforge
