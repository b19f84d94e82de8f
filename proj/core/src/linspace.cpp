#include "sheafforge/linspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sheafforge {

namespace {

RingPtr make_joint_ring(const CoordinateRing& base, std::size_t b, std::vector<std::string>& fiber) {
  std::vector<std::string> names = base.names();
  for (std::size_t i = 0; i < b; ++i) {
    std::string z = "z" + std::to_string(i + 1);
    while (std::find(names.begin(), names.end(), z) != names.end()) z += "_";
    names.push_back(z);
    fiber.push_back(z);
  }
  const std::size_t n = base.nvars();
  std::vector<int> weights(n + b, 0);
  std::fill(weights.begin() + static_cast<long>(n), weights.end(), 1);
  MonomialOrder order = MonomialOrder::weighted(std::move(weights), MonomialOrder::degrevlex());
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  OrderPtr ord = make_order(order);
  std::vector<Polynomial> rels;
  for (const Polynomial& r : base.relations()) rels.push_back(r.remap(n + b, map, ord));
  return CoordinateRing::make(std::move(names), std::move(rels), std::move(order));
}

}  // namespace

Polynomial LinearSpaceIdeal::embed(const Polynomial& f) const {
  std::vector<std::size_t> map(base_nvars());
  std::iota(map.begin(), map.end(), 0);
  return joint_ring->reduce(f.remap(joint_ring->nvars(), map, joint_ring->order()));
}

Polynomial LinearSpaceIdeal::z(std::size_t i) const { return joint_ring->var(base_nvars() + i); }

int z_degree(const Polynomial& f, std::size_t base_nvars) {
  int d = -1;
  for (const Term& t : f.terms()) {
    int s = 0;
    for (std::size_t v = base_nvars; v < f.nvars(); ++v) s += t.monomial[v];
    d = std::max(d, s);
  }
  return d;
}

LinearSpaceIdeal linear_space_ideal(const Presentation& p) {
  const std::size_t b = p.num_generators();
  std::vector<std::string> fiber;
  RingPtr joint = make_joint_ring(*p.ring(), b, fiber);
  LinearSpaceIdeal l{p.ring(), joint, fiber, Ideal::zero(joint), p};
  std::vector<Polynomial> gens;
  for (const Vec& col : p.relations()) {
    Polynomial h = joint->zero();
    for (std::size_t i = 0; i < b; ++i) h += l.embed(col[i]) * l.z(i);
    h = joint->reduce(h);
    if (h.is_zero()) continue;
    if (z_degree(h, p.ring()->nvars()) != 1) throw std::logic_error("linear_space_ideal: generator not fiberwise linear");
    gens.push_back(std::move(h));
  }
  l.ideal = Ideal(joint, std::move(gens));
  return l;
}

PrimaryComponentIdeal primary_component(const LinearSpaceIdeal& l, const Ideal& sing) {
  if (sing.is_zero()) throw std::invalid_argument("primary_component: saturating ideal is zero");
  PrimaryComponentIdeal out{l.ideal, sing, l.base_nvars(), 0};
  if (l.ideal.is_zero()) return out;
  std::vector<Ideal> parts;
  for (const Polynomial& g : sing.generators()) {
    SaturationResult s = saturate(l.ideal, l.embed(g));
    out.exponent = std::max(out.exponent, s.exponent);
    parts.push_back(std::move(s.ideal));
  }
  out.ideal = intersect(parts);
  return out;
}

Ideal base_singular_ideal(const RingPtr& ring) {
  if (ring->is_free()) return Ideal::unit(ring);
  const auto& rels = ring->relations();
  const std::size_t c = rels.size();
  std::vector<Vec> cols;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    Vec col;
    for (const Polynomial& r : rels) col.push_back(r.derivative(v));
    cols.push_back(std::move(col));
  }
  Presentation jac(ring, c, std::move(cols));
  return Ideal(ring, minors(jac, c));
}

PrimaryComponentIdeal primary_component(const LinearSpaceIdeal& l) {
  Ideal sing = singular_locus(l.source).ideal;
  if (!l.base_ring->is_free()) sing = intersect(sing, base_singular_ideal(l.base_ring));
  return primary_component(l, sing);
}

bool pc_is_linear(const PrimaryComponentIdeal& pc) {
  if (pc.ideal.is_zero()) return true;
  const RingPtr& ring = pc.ideal.ring();
  std::vector<Polynomial> low, high;
  for (const Polynomial& g : pc.ideal.basis()) {
    (z_degree(g, pc.base_nvars) <= 1 ? low : high).push_back(g);
  }
  Ideal linear(ring, low);
  return std::all_of(high.begin(), high.end(), [&](const Polynomial& g) { return linear.contains(g); });
}

ReducednessVerdict reducedness_witness(const Ideal& j, const Polynomial& g, int k) {
  ReducednessVerdict v;
  if (k < 1) throw std::invalid_argument("reducedness_witness: power must be positive");
  v.g_in_j = j.contains(g);
  v.gk_in_j = j.contains(g.pow(static_cast<unsigned>(k)));
  v.confirmed = !v.g_in_j && v.gk_in_j;
  if (v.g_in_j) {
    v.detail = "g already lies in J";
  } else if (!v.gk_in_j) {
    v.detail = "g^" + std::to_string(k) + " is not in J";
  } else {
    v.detail = "g is a nonzero nilpotent of order <= " + std::to_string(k);
  }
  return v;
}

bool is_normal_hypersurface(const RingPtr& ring, const Polynomial& f) {
  if (!ring->is_free()) throw std::invalid_argument("is_normal_hypersurface: free base ring required");
  if (f.is_zero()) throw std::invalid_argument("is_normal_hypersurface: f = 0");
  Ideal hyper(ring, {f});
  if (hyper.is_unit()) return true;
  std::vector<Polynomial> gens{f};
  for (std::size_t v = 0; v < ring->nvars(); ++v) gens.push_back(f.derivative(v));
  Ideal jac(ring, gens);
  if (jac.is_unit()) return true;
  return dimension(hyper).dim - dimension(jac).dim >= 2;
}

}  // namespace sheafforge
