#include <algorithm>
#include <stdexcept>

#include "sheafforge/module.hpp"

namespace sheafforge {

namespace {

Polynomial least_degree(const std::vector<Polynomial>& gens) {
  auto it = std::min_element(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.terms().size() < b.terms().size();
  });
  return *it;
}

// Shifts every variable by the point, so the point moves to the origin.
Presentation translate(const Presentation& p, const std::vector<Rational>& point) {
  const RingPtr& ring = p.ring();
  if (std::all_of(point.begin(), point.end(), [](const Rational& q) { return sgn(q) == 0; })) return p;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    images.push_back(Polynomial::variable(ring->nvars(), i, ring->order()) +
                     Polynomial::constant(ring->nvars(), point[i], ring->order()));
  }
  std::vector<Polynomial> rels;
  for (const Polynomial& r : ring->relations()) rels.push_back(substitute(r, images));
  RingPtr moved = CoordinateRing::make(ring->names(), rels, *ring->order());
  std::vector<Vec> cols;
  for (const Vec& c : p.relations()) {
    Vec v;
    for (const Polynomial& e : c) v.push_back(substitute(e, images));
    cols.push_back(std::move(v));
  }
  return Presentation(moved, p.num_generators(), std::move(cols));
}

}  // namespace

TorsionResult torsion_submodule(const Presentation& p) {
  const RingPtr& ring = p.ring();
  const std::size_t b = p.num_generators();
  int r = generic_rank(p);
  TorsionResult out{{}, p, {}, std::nullopt, 0, false};
  Ideal fitt = fitting_ideal(p, r);
  if (fitt.is_unit()) return out;
  Polynomial f = least_degree(fitt.generators());
  out.saturating_element = f;
  ModuleSaturation sat = module_saturate(ring, b, p.relations(), f);
  out.exponent = sat.exponent;
  Submodule image(ring, b, p.relations());
  std::vector<Vec> cols = p.relations();
  for (const Vec& t : sat.generators) {
    if (image.contains(t)) continue;
    out.torsion_generators.push_back({ring, t});
    // Least-degree element of the annihilator (N : t).
    std::vector<Polynomial> ann;
    for (const Vec& k : kernel_modulo(ring, b, {t}, p.relations())) ann.push_back(k[0]);
    out.witnesses.push_back(ann.empty() ? f : least_degree(ann));
    cols.push_back(t);
  }
  out.whole_module = r == 0;
  if (!out.torsion_generators.empty()) out.quotient = Presentation(ring, b, std::move(cols));
  return out;
}

bool is_torsion_free(const Presentation& p) { return torsion_submodule(p).torsion_generators.empty(); }

SingularLocus singular_locus(const Presentation& p) {
  const RingPtr& ring = p.ring();
  Ideal sing = fitting_ideal(p, generic_rank(p));
  TorsionResult t = torsion_submodule(p);
  bool adjusted = false;
  if (!t.torsion_generators.empty()) {
    // Support of the torsion part: annihilators (N : t) of the torsion classes.
    Ideal ann = Ideal::unit(ring);
    for (const FreeElement& e : t.torsion_generators) {
      std::vector<Polynomial> gens;
      for (const Vec& k : kernel_modulo(ring, p.num_generators(), {e.coords}, p.relations())) gens.push_back(k[0]);
      ann = intersect(ann, Ideal(ring, gens));
    }
    sing = intersect(sing, ann);
    adjusted = true;
  }
  DimensionInfo info = dimension(sing);
  return {sing, info, adjusted};
}

ClassifyReport classify_sheaf(const Presentation& p, const std::vector<Rational>& point) {
  const RingPtr& ring = p.ring();
  ClassifyReport rep{0, 0, 0, Ideal::zero(ring), 0, false, false, true, false, std::nullopt, true, {}};
  rep.rank = generic_rank(p);
  rep.min_generators_at_point = min_generators_at(p, point);
  rep.corank_at_point = rep.min_generators_at_point - rep.rank;
  SingularLocus sing = singular_locus(p);
  rep.singular_locus = sing.ideal;
  rep.sing_codim = sing.info.codim;
  if (sing.torsion_adjusted) rep.notes.push_back("singular locus includes the support of the torsion part");
  rep.is_torsion_free = is_torsion_free(p);
  std::optional<bool> hd = hom_dim_le_1_at_origin(translate(p, point));
  rep.hom_dim_conclusive = hd.has_value();
  rep.hom_dim_le_1 = hd.value_or(false);
  if (!hd) rep.notes.push_back("homological dimension not certified: presentation is not graded at the point");
  if (!ring->is_free()) {
    rep.notes.push_back("ring relations asserted prime by the caller");
  }
  rep.hypotheses_hold = rep.corank_at_point <= 2 && rep.sing_codim >= rep.corank_at_point + 1 && ring->is_free();
  if (rep.hypotheses_hold && rep.hom_dim_conclusive) {
    rep.thm12_consistent = rep.is_torsion_free == rep.hom_dim_le_1;
  }
  if (!rep.hypotheses_hold) rep.notes.push_back("hypotheses fail: biconditional not asserted");
  return rep;
}

}  // namespace sheafforge
