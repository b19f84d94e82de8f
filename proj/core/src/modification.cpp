#include "sheafforge/modification.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "internal.hpp"

namespace sheafforge {

std::vector<std::string> base_names(std::size_t n) {
  if (n == 1) return {"x"};
  if (n == 2) return {"x", "y"};
  if (n == 3) return {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

namespace {

std::string chart_var_name(std::size_t n, std::size_t s, std::size_t j) {
  if (n == 2 && s == 2) return j == 0 ? "s" : "t";
  return "t" + std::to_string(j + 1);
}

Polynomial power_of(const Polynomial& base, int e) { return base.pow(static_cast<unsigned>(e)); }

}  // namespace

int transfer_power(const Overlap& o, const Polynomial& f) {
  int best = 0;
  for (const Term& t : f.terms()) {
    int p = 0;
    for (std::size_t j = 0; j < f.nvars(); ++j) p += t.monomial[j] * o.powers[j];
    best = std::max(best, p);
  }
  return best;
}

Polynomial transfer(const Overlap& o, const Polynomial& f, int clear, const CoordinateRing& target) {
  if (f.nvars() != o.numerators.size()) throw std::invalid_argument("transfer: polynomial is not in the source chart");
  const std::size_t n = target.nvars();
  Polynomial d = Polynomial::variable(n, o.denominator, target.order());
  Polynomial out = target.zero();
  for (const Term& t : f.terms()) {
    int p = 0;
    Polynomial term = Polynomial::constant(n, t.coeff, target.order());
    for (std::size_t j = 0; j < f.nvars(); ++j) {
      if (t.monomial[j] == 0) continue;
      p += t.monomial[j] * o.powers[j];
      term *= power_of(o.numerators[j], t.monomial[j]);
    }
    if (p > clear) throw std::invalid_argument("transfer: denominator power exceeds the clearing power");
    out += term * power_of(d, clear - p);
  }
  return target.reduce(out);
}

std::string Modification::describe() const {
  switch (kind) {
    case ModificationKind::kBlowupOrigin:
      return "blow-up of A^" + std::to_string(n) + " at the origin (" + std::to_string(charts.size()) + " charts)";
    case ModificationKind::kBlowupSubspace:
      return "blow-up of A^" + std::to_string(n) + " along a codimension-" + std::to_string(s) + " coordinate subspace (" +
             std::to_string(charts.size()) + " charts)";
    case ModificationKind::kFiniteMap:
      return "finite map to " + base->header();
  }
  return "modification";
}

Modification blowup_coordinate_subspace(std::size_t n, std::size_t s) {
  if (n < 1) throw std::invalid_argument("blow-up: n must be at least 1");
  if (s < 1 || s > n) throw std::invalid_argument("blow-up: center codimension must satisfy 1 <= s <= n");
  Modification m;
  m.kind = s == n ? ModificationKind::kBlowupOrigin : ModificationKind::kBlowupSubspace;
  m.n = n;
  m.s = s;
  std::vector<std::string> base = base_names(n);
  m.base = free_ring(base);
  std::vector<RingPtr> rings;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::string> names = base;
    for (std::size_t j = 0; j < s; ++j) {
      if (j != i) names[j] = chart_var_name(n, s, j);
    }
    rings.push_back(free_ring(std::move(names)));
  }
  for (std::size_t i = 0; i < s; ++i) {
    const RingPtr& r = rings[i];
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < n; ++j) images.push_back(j < s && j != i ? r->var(i) * r->var(j) : r->var(j));
    Chart c{r, RingMap(m.base, r, std::move(images)), Ideal(r, {r->var(i)}), i, {}};
    for (std::size_t k = 0; k < s; ++k) {
      if (k == i) continue;
      const RingPtr& rk = rings[k];
      Overlap o;
      o.from = i;
      o.to = k;
      o.denominator = i;  // t'_i in chart k
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) {
          o.numerators.push_back(rk->var(k) * rk->var(i));
          o.powers.push_back(0);
        } else if (j < s) {
          o.numerators.push_back(j == k ? rk->one() : rk->var(j));
          o.powers.push_back(1);
        } else {
          o.numerators.push_back(rk->var(j));
          o.powers.push_back(0);
        }
      }
      c.overlaps.push_back(std::move(o));
    }
    m.charts.push_back(std::move(c));
  }
  return m;
}

Modification blowup_origin(std::size_t n) { return blowup_coordinate_subspace(n, n); }

Modification finite_map(const RingMap& phi, std::vector<Polynomial> basis) {
  if (basis.empty()) throw std::invalid_argument("finite_map: a module basis of the target is required");
  for (Polynomial& b : basis) {
    if (b.nvars() != phi.target()->nvars()) throw std::invalid_argument("finite_map: basis element not in the target");
    b = phi.target()->reduce(b);
  }
  Modification m;
  m.kind = ModificationKind::kFiniteMap;
  m.n = phi.source()->nvars();
  m.s = 0;
  m.base = phi.source();
  m.charts.push_back(Chart{phi.target(), phi, Ideal::zero(phi.target()), std::nullopt, {}});
  m.finite_basis = std::move(basis);
  return m;
}

std::vector<Presentation> pullback(const Presentation& p, const Modification& m) {
  if (p.ring()->names() != m.base->names()) throw std::invalid_argument("pullback: presentation is not over the base");
  std::vector<Presentation> out;
  for (const Chart& c : m.charts) {
    std::vector<Vec> cols;
    for (const Vec& col : p.relations()) {
      Vec v;
      for (const Polynomial& e : col) v.push_back(c.to_base.apply(e));
      cols.push_back(std::move(v));
    }
    std::optional<std::vector<Polynomial>> gens;
    if (p.ideal_generators()) {
      gens.emplace();
      for (const Polynomial& g : *p.ideal_generators()) gens->push_back(c.to_base.apply(g));
    }
    out.emplace_back(c.ring, p.num_generators(), std::move(cols), std::move(gens));
  }
  return out;
}

std::vector<ChartTransform> torsion_free_pullback(const Presentation& p, const Modification& m) {
  std::vector<ChartTransform> out;
  for (const Presentation& pulled : pullback(p, m)) {
    TorsionResult t = torsion_submodule(pulled);
    ChartTransform ct{t.quotient.with_ideal_generators(pulled.ideal_generators()), t.torsion_generators, std::nullopt, true};
    if (pulled.ideal_generators()) {
      const auto& gens = *pulled.ideal_generators();
      ct.transform_ideal = Ideal(pulled.ring(), gens);
      std::vector<Vec> rows;
      for (const Polynomial& g : gens) rows.push_back(Vec{g});
      std::vector<Vec> kernel = kernel_modulo(pulled.ring(), 1, rows, {}, false);
      ct.transform_matches = same_submodule(pulled.ring(), gens.size(), kernel, ct.presentation.relations());
    }
    out.push_back(std::move(ct));
  }
  return out;
}

std::vector<ModuleMap> torsion_free_pullback(const ModuleMap& f, const Modification& m) {
  std::vector<ChartTransform> src = torsion_free_pullback(f.source, m);
  std::vector<ChartTransform> dst = torsion_free_pullback(f.target, m);
  std::vector<ModuleMap> out;
  for (std::size_t i = 0; i < m.charts.size(); ++i) {
    std::vector<Vec> images;
    for (const Vec& v : f.images) {
      Vec w;
      for (const Polynomial& e : v) w.push_back(m.charts[i].to_base.apply(e));
      images.push_back(std::move(w));
    }
    out.push_back(ModuleMap{src[i].presentation, dst[i].presentation, std::move(images)});
  }
  return out;
}

std::vector<Ideal> transform_ideals(const Ideal& ideal, const Modification& m) {
  std::vector<Ideal> out;
  for (const Chart& c : m.charts) {
    std::vector<Polynomial> gens;
    for (const Polynomial& g : ideal.generators()) gens.push_back(c.to_base.apply(g));
    out.emplace_back(c.ring, std::move(gens));
  }
  return out;
}

Ideal contraction(const Ideal& k, const RingMap& phi) {
  const RingPtr& src = phi.source();
  const RingPtr& tgt = phi.target();
  if (k.ring()->names() != tgt->names()) throw std::invalid_argument("contraction: ideal is not over the map's target");
  if (k.is_unit()) return Ideal::unit(src);
  const std::size_t mt = tgt->nvars(), ns = src->nvars();
  OrderPtr big = default_order();
  std::vector<std::size_t> id(mt), up(ns);
  std::iota(id.begin(), id.end(), 0);
  std::iota(up.begin(), up.end(), mt);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : internal::with_relations(*tgt, k.generators())) gens.push_back(g.remap(mt + ns, id, big));
  for (std::size_t i = 0; i < ns; ++i) {
    Polynomial x = Polynomial::variable(mt + ns, mt + i, big);
    gens.push_back(x - phi.images()[i].remap(mt + ns, id, big));
  }
  std::vector<Polynomial> out;
  for (const Polynomial& p : eliminate_leading(gens, mt + ns, mt, MonomialOrder::degrevlex())) {
    out.push_back(internal::unshift(p, mt, src->order()));
  }
  return Ideal(src, std::move(out));
}

bool charts_compatible(const std::vector<Ideal>& chart_ideals, const Modification& m) {
  if (chart_ideals.size() != m.charts.size()) throw std::invalid_argument("one ideal per chart required");
  for (std::size_t i = 0; i < m.charts.size(); ++i) {
    for (const Overlap& o : m.charts[i].overlaps) {
      const Chart& target = m.charts[o.to];
      Ideal sat = saturate(chart_ideals[o.to], target.ring->var(o.denominator)).ideal;
      for (const Polynomial& g : chart_ideals[i].generators()) {
        if (!sat.contains(transfer(o, g, transfer_power(o, g), *target.ring))) return false;
      }
    }
  }
  return true;
}

Ideal pushforward_ideal(const std::vector<Ideal>& chart_ideals, const Modification& m) {
  if (!charts_compatible(chart_ideals, m)) {
    throw std::invalid_argument("pushforward_ideal: chart ideals disagree on an overlap");
  }
  std::vector<Ideal> parts;
  for (std::size_t i = 0; i < m.charts.size(); ++i) parts.push_back(contraction(chart_ideals[i], m.charts[i].to_base));
  return intersect(parts);
}

Presentation pushforward_finite(const Presentation& p, const Modification& m) {
  if (m.kind != ModificationKind::kFiniteMap) throw std::invalid_argument("pushforward_finite: finite map required");
  const Chart& chart = m.charts.front();
  const RingPtr& tgt = chart.ring;
  const RingPtr& src = m.base;
  if (p.ring()->names() != tgt->names()) throw std::invalid_argument("pushforward_finite: presentation is not over the target");
  const std::size_t b = p.num_generators(), nb = m.finite_basis.size();
  if (b == 0) return Presentation(src, 0, {});
  const std::size_t mt = tgt->nvars(), ns = src->nvars();

  std::vector<std::string> names;
  for (std::size_t i = 0; i < mt + ns; ++i) names.push_back("v" + std::to_string(i));
  MonomialOrder elim = MonomialOrder::block(mt, MonomialOrder::degrevlex(), MonomialOrder::degrevlex());
  OrderPtr eord = make_order(elim);
  std::vector<std::size_t> id(mt);
  std::iota(id.begin(), id.end(), 0);
  auto lift = [&](const Polynomial& f) { return f.remap(mt + ns, id, eord); };
  std::vector<Polynomial> rels;
  for (const Polynomial& r : tgt->relation_basis()) rels.push_back(lift(r));
  for (std::size_t i = 0; i < ns; ++i) {
    rels.push_back(Polynomial::variable(mt + ns, mt + i, eord) - lift(chart.to_base.images()[i]));
  }
  RingPtr joint = CoordinateRing::make(names, rels, elim);

  std::vector<Vec> vectors;
  for (std::size_t k = 0; k < b; ++k) {
    for (std::size_t l = 0; l < nb; ++l) {
      Vec v(b, joint->zero());
      v[k] = joint->reduce(lift(m.finite_basis[l]));
      vectors.push_back(std::move(v));
    }
  }
  std::vector<Vec> ambient;
  for (const Vec& col : p.relations()) {
    Vec v;
    for (const Polynomial& e : col) v.push_back(joint->reduce(lift(e)));
    ambient.push_back(std::move(v));
  }
  std::vector<Vec> kernel = kernel_modulo(joint, b, vectors, ambient, false);
  const std::size_t rank = b * nb;
  for (const Polynomial& r : joint->relation_basis()) {
    for (std::size_t i = 0; i < rank; ++i) {
      Vec v(rank, joint->zero());
      v[i] = r;
      kernel.push_back(std::move(v));
    }
  }
  ModuleBasis gb(kernel, rank, mt + ns, ModuleOrder{elim, ModuleOrder::Kind::kTermOverPosition});
  std::vector<Vec> cols;
  for (const Vec& el : gb.elements()) {
    bool free_of_target = std::all_of(el.begin(), el.end(), [&](const Polynomial& f) {
      for (std::size_t v = 0; v < mt; ++v) {
        if (f.involves(v)) return false;
      }
      return true;
    });
    if (!free_of_target) continue;
    Vec c;
    for (const Polynomial& f : el) c.push_back(src->reduce(internal::unshift(f, mt, src->order())));
    if (!is_zero_vec(c)) cols.push_back(std::move(c));
  }
  return Presentation(src, rank, minimalize_generators(src, rank, std::move(cols)));
}

int variable_order(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) throw std::invalid_argument("variable_order: zero polynomial");
  int k = f.terms().front().monomial[var];
  for (const Term& t : f.terms()) k = std::min(k, t.monomial[var]);
  return k;
}

namespace {

Polynomial jacobian_determinant(const Chart& c) {
  auto jac = c.to_base.jacobian();
  std::vector<Vec> cols(jac.begin(), jac.end());  // det(J) = det(J^T)
  return determinant(cols, *c.ring);
}

void require_blowup(const Modification& m) {
  if (m.kind == ModificationKind::kFiniteMap) throw std::invalid_argument("blow-up required");
}

}  // namespace

DivisorOnBlowup canonical_multiplicity(const Modification& m) {
  require_blowup(m);
  DivisorOnBlowup d;
  for (const Chart& c : m.charts) d.multiplicity.push_back(variable_order(jacobian_determinant(c), *c.exceptional_var));
  return d;
}

bool TopFormsReport::holds() const {
  return std::all_of(cofactor_unit.begin(), cofactor_unit.end(), [](bool b) { return b; });
}

TopFormsReport verify_injection_chain_top_forms(const Modification& m) {
  require_blowup(m);
  TopFormsReport rep;
  for (const Chart& c : m.charts) {
    Polynomial det = jacobian_determinant(c);
    std::size_t u = *c.exceptional_var;
    int d = variable_order(det, u);
    auto cof = det.divide_exact(c.ring->var(u).pow(static_cast<unsigned>(d)));
    rep.divisor.multiplicity.push_back(d);
    rep.cofactor_unit.push_back(cof && cof->is_constant() && !cof->is_zero());
  }
  return rep;
}

ChainReport verify_injection_chain(const Presentation& p, const Modification& m, int degree_bound) {
  if (!p.ideal_generators()) throw std::invalid_argument("verify_injection_chain: ideal sheaf input required");
  Ideal sheaf(p.ring(), *p.ideal_generators());
  SectionsResult sec = truncated_global_sections(pullback(p, m), m, degree_bound);
  std::vector<Ideal> charts = transform_ideals(sheaf, m);
  Ideal transform = pushforward_ideal(charts, m);
  ChainReport rep{sheaf, sec.image, transform, sec.stable, false, false, false, false, std::nullopt, std::nullopt, std::nullopt};
  rep.sheaf_in_sections = sec.image.contains(sheaf);
  rep.sections_in_transform = transform.contains(sec.image);
  for (const Polynomial& g : sec.image.reduced_generators()) {
    if (!sheaf.contains(g)) {
      rep.first_strict = true;
      rep.first_witness = g;
      break;
    }
  }
  for (const Polynomial& g : transform.reduced_generators()) {
    if (!sec.image.contains(g)) {
      rep.second_strict = true;
      rep.second_witness = g;
      break;
    }
  }
  DivisorOnBlowup div;
  bool principal = true;
  for (std::size_t i = 0; i < charts.size() && principal; ++i) {
    const auto& basis = charts[i].basis();
    const auto& u = m.charts[i].exceptional_var;
    if (basis.size() != 1 || !u) {
      principal = false;
      break;
    }
    int d = variable_order(basis.front(), *u);
    auto cof = basis.front().divide_exact(m.charts[i].ring->var(*u).pow(static_cast<unsigned>(d)));
    principal = cof && cof->is_constant();
    div.multiplicity.push_back(d);
  }
  if (principal) rep.divisor = div;
  return rep;
}

}  // namespace sheafforge
