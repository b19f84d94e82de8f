#include "sheafforge/ring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "sheafforge/groebner.hpp"
#include "sheafforge/parse.hpp"

namespace sheafforge {

RingPtr CoordinateRing::make(std::vector<std::string> names, std::vector<Polynomial> relations,
                             MonomialOrder order) {
  std::unordered_set<std::string> seen;
  for (const std::string& n : names) {
    if (!seen.insert(n).second) throw std::invalid_argument("ring: duplicate variable '" + n + "'");
  }
  auto ring = std::shared_ptr<CoordinateRing>(new CoordinateRing());
  ring->names_ = std::move(names);
  ring->order_ = make_order(std::move(order));
  for (Polynomial& r : relations) {
    if (r.nvars() != ring->nvars()) throw std::invalid_argument("ring: relation has wrong variable count");
    r = r.with_order(ring->order_);
    if (!r.is_zero()) ring->relations_.push_back(std::move(r));
  }
  if (!ring->relations_.empty()) {
    for (Polynomial& g : groebner_basis(ring->relations_, ring->nvars(), *ring->order_)) {
      ring->relation_basis_.push_back(g.with_order(ring->order_));
    }
  }
  return ring;
}

RingPtr CoordinateRing::make(std::vector<std::string> names, const std::vector<std::string>& relations,
                             MonomialOrder order) {
  OrderPtr ord = make_order(order);
  std::vector<Polynomial> rels;
  for (const std::string& r : relations) rels.push_back(parse_polynomial(r, names, ord));
  return make(std::move(names), std::move(rels), std::move(order));
}

RingPtr free_ring(std::vector<std::string> names, MonomialOrder order) {
  return CoordinateRing::make(std::move(names), std::vector<Polynomial>{}, std::move(order));
}

std::size_t CoordinateRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("ring: unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool CoordinateRing::has_variable(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Polynomial CoordinateRing::zero() const { return Polynomial(nvars(), order_); }
Polynomial CoordinateRing::one() const { return constant(1); }
Polynomial CoordinateRing::constant(const Rational& c) const {
  return reduce(Polynomial::constant(nvars(), c, order_));
}
Polynomial CoordinateRing::var(std::size_t i) const {
  return reduce(Polynomial::variable(nvars(), i, order_));
}
Polynomial CoordinateRing::var(const std::string& name) const { return var(index_of(name)); }

Polynomial CoordinateRing::parse(const std::string& text) const {
  return reduce(parse_polynomial(text, names_, order_));
}

void CoordinateRing::check(const Polynomial& f) const {
  if (f.nvars() != nvars()) throw std::invalid_argument("ring: variable-count mismatch");
}

Polynomial CoordinateRing::reduce(const Polynomial& f) const {
  check(f);
  Polynomial g = f.with_order(order_);
  if (relation_basis_.empty()) return g;
  return normal_form(g, relation_basis_);
}

bool CoordinateRing::equal(const Polynomial& f, const Polynomial& g) const { return is_zero(f - g); }
Polynomial CoordinateRing::add(const Polynomial& f, const Polynomial& g) const { return poly_arith(*this, f, g, ArithOp::kAdd); }
Polynomial CoordinateRing::sub(const Polynomial& f, const Polynomial& g) const { return poly_arith(*this, f, g, ArithOp::kSub); }
Polynomial CoordinateRing::mul(const Polynomial& f, const Polynomial& g) const { return poly_arith(*this, f, g, ArithOp::kMul); }

bool CoordinateRing::contains_point(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("point dimension does not match the ring");
  return std::all_of(relations_.begin(), relations_.end(),
                     [&](const Polynomial& r) { return sheafforge::is_zero(r.evaluate(point)); });
}

RingPtr CoordinateRing::with_order(MonomialOrder order) const {
  return make(names_, relations_, std::move(order));
}

std::string CoordinateRing::header() const {
  std::string out = "ring ";
  for (std::size_t i = 0; i < names_.size(); ++i) out += (i ? ", " : "") + names_[i];
  if (!relations_.empty()) {
    out += " | relations: ";
    for (std::size_t i = 0; i < relations_.size(); ++i) out += (i ? ", " : "") + format(relations_[i]);
  }
  out += " | order: " + order_->name();
  return out;
}

Polynomial poly_arith(const CoordinateRing& ring, const Polynomial& f, const Polynomial& g, ArithOp op) {
  if (f.nvars() != ring.nvars() || g.nvars() != ring.nvars()) {
    throw std::invalid_argument("poly_arith: variable-count mismatch");
  }
  Polynomial a = f.with_order(ring.order());
  switch (op) {
    case ArithOp::kAdd:
      return ring.reduce(a + g);
    case ArithOp::kSub:
      return ring.reduce(a - g);
    case ArithOp::kMul:
      return ring.reduce(a * g);
  }
  return a;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars()) throw std::invalid_argument("substitute: one image per variable required");
  if (images.empty()) {
    throw std::invalid_argument("substitute: no images");
  }
  const std::size_t n = images.front().nvars();
  const OrderPtr& ord = images.front().order();
  // Powers are cached per variable; exponents in desk-scale inputs stay small.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(n, 1, ord));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial out(n, ord);
  for (const Term& t : f.terms()) {
    Polynomial term = Polynomial::constant(n, t.coeff, ord);
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      if (t.monomial[v] > 0) term *= power(v, t.monomial[v]);
    }
    out += term;
  }
  return out;
}

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (images.size() != source_->nvars()) {
    throw std::invalid_argument("RingMap: need one image per source variable");
  }
  for (Polynomial& p : images) images_.push_back(target_->reduce(p));
  for (const Polynomial& r : source_->relations()) {
    Polynomial img = apply(r);
    if (!img.is_zero()) {
      throw std::invalid_argument("RingMap: relation " + source_->format(r) +
                                  " maps to nonzero " + target_->format(img));
    }
  }
}

RingMap RingMap::identity(const RingPtr& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(ring->var(i));
  return RingMap(ring, ring, std::move(images));
}

Polynomial RingMap::apply(const Polynomial& f) const {
  if (f.nvars() != source_->nvars()) throw std::invalid_argument("RingMap::apply: polynomial not in source");
  if (images_.empty()) {
    auto c = f.constant_value();
    if (!c) throw std::invalid_argument("RingMap::apply: nonconstant polynomial over empty ring");
    return target_->constant(*c);
  }
  return target_->reduce(substitute(f, images_));
}

std::vector<std::vector<Polynomial>> RingMap::jacobian() const {
  std::vector<std::vector<Polynomial>> jac;
  for (const Polynomial& img : images_) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < target_->nvars(); ++j) row.push_back(target_->reduce(img.derivative(j)));
    jac.push_back(std::move(row));
  }
  return jac;
}

Polynomial apply_map(const RingMap& phi, const Polynomial& f) { return phi.apply(f); }

}  // namespace sheafforge
