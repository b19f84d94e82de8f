#include "sheafforge/ideal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "internal.hpp"

namespace sheafforge {

namespace internal {

Polynomial shift(const Polynomial& f, std::size_t k, const OrderPtr& order) {
  std::vector<std::size_t> map(f.nvars());
  std::iota(map.begin(), map.end(), k);
  return f.remap(f.nvars() + k, map, order);
}

Polynomial unshift(const Polynomial& f, std::size_t k, const OrderPtr& order) {
  std::vector<std::size_t> map(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) map[i] = i < k ? f.nvars() : i - k;
  return f.remap(f.nvars() - k, map, order);
}

std::vector<Polynomial> free_intersect(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                       std::size_t nvars, const OrderPtr& order) {
  bool a_zero = std::all_of(a.begin(), a.end(), [](const Polynomial& p) { return p.is_zero(); });
  bool b_zero = std::all_of(b.begin(), b.end(), [](const Polynomial& p) { return p.is_zero(); });
  if (a_zero || b_zero) return {};
  OrderPtr big = default_order();
  Polynomial t = Polynomial::variable(nvars + 1, 0, big);
  Polynomial one_minus_t = Polynomial::constant(nvars + 1, 1, big) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a) gens.push_back(t * shift(f, 1, big));
  for (const Polynomial& g : b) gens.push_back(one_minus_t * shift(g, 1, big));
  std::vector<Polynomial> out;
  for (const Polynomial& p : eliminate_leading(gens, nvars + 1, 1, MonomialOrder::degrevlex())) {
    out.push_back(unshift(p, 1, order));
  }
  return groebner_basis(out, nvars, *order);
}

std::vector<Polynomial> with_relations(const CoordinateRing& ring, std::vector<Polynomial> gens) {
  for (const Polynomial& r : ring.relation_basis()) gens.push_back(r);
  return gens;
}

}  // namespace internal

using internal::free_intersect;
using internal::with_relations;

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (const Polynomial& g : generators) {
    Polynomial r = ring_->reduce(g);
    if (!r.is_zero()) generators_.push_back(std::move(r));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = ring->one();
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const std::string& g : generators) gens.push_back(ring->parse(g));
  return Ideal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    std::vector<Polynomial> gens = with_relations(*ring_, generators_);
    for (Polynomial& g : groebner_basis(gens, ring_->nvars(), *ring_->order())) {
      cache_->basis.push_back(g.with_order(ring_->order()));
    }
  });
  return cache_->basis;
}

std::vector<Polynomial> Ideal::reduced_generators() const {
  std::vector<Polynomial> out;
  for (const Polynomial& g : basis()) {
    Polynomial r = ring_->reduce(g);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (f.nvars() != ring_->nvars()) throw std::invalid_argument("Ideal: variable-count mismatch");
  return sheafforge::normal_form(f.with_order(ring_->order()), basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant() && !b.front().is_zero();
}

bool Ideal::is_zero() const { return generators_.empty(); }

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? ", " : "") + ring_->format(generators_[i]);
  return out + ")";
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  return groebner_basis(with_relations(*ideal.ring(), ideal.generators()), ideal.ring()->nvars(), order);
}

bool membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

namespace {

void same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring() && a.ring()->names() != b.ring()->names()) {
    throw std::invalid_argument("ideal operation across different rings");
  }
}

Ideal from_free(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) out.push_back(g.with_order(ring->order()));
  return Ideal(ring, std::move(out));
}

}  // namespace

Ideal ideal_ops(const Ideal& a, const Ideal& b, IdealOp op) {
  same_ring(a, b);
  const RingPtr& ring = a.ring();
  switch (op) {
    case IdealOp::kSum: {
      std::vector<Polynomial> g = a.generators();
      g.insert(g.end(), b.generators().begin(), b.generators().end());
      return Ideal(ring, std::move(g));
    }
    case IdealOp::kProduct: {
      std::vector<Polynomial> g;
      for (const Polynomial& f : a.generators()) {
        for (const Polynomial& h : b.generators()) g.push_back(f * h);
      }
      return Ideal(ring, std::move(g));
    }
    case IdealOp::kIntersect: {
      if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
      return from_free(ring, free_intersect(with_relations(*ring, a.generators()),
                                            with_relations(*ring, b.generators()), ring->nvars(), ring->order()));
    }
    case IdealOp::kQuotient: {
      Ideal out = Ideal::unit(ring);
      for (const Polynomial& g : b.generators()) out = intersect(out, quotient(a, g));
      return out;
    }
  }
  return a;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) { return ideal_ops(a, b, IdealOp::kSum); }
Ideal ideal_product(const Ideal& a, const Ideal& b) { return ideal_ops(a, b, IdealOp::kProduct); }
Ideal intersect(const Ideal& a, const Ideal& b) { return ideal_ops(a, b, IdealOp::kIntersect); }
Ideal quotient(const Ideal& ideal, const Ideal& by) { return ideal_ops(ideal, by, IdealOp::kQuotient); }

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersect: empty list");
  Ideal out = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) out = intersect(out, ideals[i]);
  return out;
}

Ideal quotient(const Ideal& ideal, const Polynomial& g) {
  const RingPtr& ring = ideal.ring();
  Polynomial h = ring->reduce(g);
  if (h.is_zero()) return Ideal::unit(ring);
  if (ideal.contains(h)) return Ideal::unit(ring);
  // (I + P) meet (h) in the free ring, then divide by h there.
  std::vector<Polynomial> meet =
      free_intersect(with_relations(*ring, ideal.generators()), {h}, ring->nvars(), ring->order());
  std::vector<Polynomial> out;
  for (const Polynomial& m : meet) {
    auto q = m.divide_exact(h);
    if (!q) throw std::logic_error("quotient: intersection element not divisible");
    out.push_back(*q);
  }
  return Ideal(ring, std::move(out));
}

Ideal quotient_power(const Ideal& ideal, const Polynomial& f, int k) {
  Ideal out = ideal;
  for (int i = 0; i < k; ++i) out = quotient(out, f);
  return out;
}

SaturationResult saturate(const Ideal& ideal, const Polynomial& f) {
  const RingPtr& ring = ideal.ring();
  Polynomial h = ring->reduce(f);
  if (h.is_zero()) throw std::invalid_argument("saturate: saturating element is zero");
  const std::size_t n = ring->nvars();
  OrderPtr big = default_order();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : with_relations(*ring, ideal.generators())) gens.push_back(internal::shift(g, 1, big));
  Polynomial u = Polynomial::variable(n + 1, 0, big);
  gens.push_back(Polynomial::constant(n + 1, 1, big) - u * internal::shift(h, 1, big));
  std::vector<Polynomial> elim;
  for (const Polynomial& p : eliminate_leading(gens, n + 1, 1, MonomialOrder::degrevlex())) {
    elim.push_back(internal::unshift(p, 1, ring->order()));
  }
  Ideal sat(ring, std::move(elim));
  int k = 0;
  Ideal cur = ideal;
  while (!cur.contains(sat)) {
    cur = quotient(cur, h);
    ++k;
  }
  return {sat, k};
}

SaturationResult saturate(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) return {Ideal::unit(ideal.ring()), ideal.is_unit() ? 0 : 1};
  std::vector<Ideal> parts;
  int k = 0;
  for (const Polynomial& g : by.generators()) {
    SaturationResult s = saturate(ideal, g);
    k = std::max(k, s.exponent);
    parts.push_back(std::move(s.ideal));
  }
  return {intersect(parts), k};
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t> drop) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  std::vector<bool> dropped(n, false);
  for (std::size_t d : drop) dropped.at(d) = true;
  // Permute dropped variables to the front.
  std::vector<std::size_t> to_front(n), back(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dropped[i]) to_front[i] = next++;
  }
  const std::size_t k = next;
  for (std::size_t i = 0; i < n; ++i) {
    if (!dropped[i]) to_front[i] = next++;
  }
  for (std::size_t i = 0; i < n; ++i) back[to_front[i]] = i;
  OrderPtr big = default_order();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : with_relations(*ring, ideal.generators())) gens.push_back(g.remap(n, to_front, big));
  std::vector<Polynomial> out;
  for (const Polynomial& p : eliminate_leading(gens, n, k, MonomialOrder::degrevlex())) {
    out.push_back(p.remap(n, back, ring->order()));
  }
  return Ideal(ring, std::move(out));
}

DimensionInfo dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  int ring_dim = ring_dimension(*ideal.ring());
  if (ideal.is_unit()) return {-1, ring_dim + 1};
  if (n > 24) throw std::domain_error("dimension: too many variables for subset search");
  std::vector<unsigned long> supports;
  for (const Polynomial& g : ideal.basis()) {
    unsigned long mask = 0;
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) mask |= 1ul << i;
    }
    supports.push_back(mask);
  }
  int best = 0;
  for (unsigned long s = 0; s < (1ul << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](unsigned long m) { return (m & ~s) == 0; });
    if (independent) best = size;
  }
  return {best, ring_dim - best};
}

int ring_dimension(const CoordinateRing& ring) {
  const std::size_t n = ring.nvars();
  if (ring.is_free()) return static_cast<int>(n);
  std::vector<unsigned long> supports;
  for (const Polynomial& g : ring.relation_basis()) {
    unsigned long mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g.leading_monomial()[i] > 0) mask |= 1ul << i;
    }
    supports.push_back(mask);
  }
  if (std::find(supports.begin(), supports.end(), 0ul) != supports.end()) return -1;
  int best = 0;
  for (unsigned long s = 0; s < (1ul << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    if (std::none_of(supports.begin(), supports.end(), [s](unsigned long m) { return (m & ~s) == 0; })) best = size;
  }
  return best;
}

}  // namespace sheafforge
