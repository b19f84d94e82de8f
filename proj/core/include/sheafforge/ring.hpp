#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sheafforge/order.hpp"
#include "sheafforge/polynomial.hpp"

namespace sheafforge {

class CoordinateRing;
using RingPtr = std::shared_ptr<const CoordinateRing>;

/// Q[v1..vn] / (relations). Quotients are stored as the free ring plus a
/// reduced Groebner basis of the relations under the ring's order; every
/// arithmetic result is returned in normal form.
///
/// Operations that need an integral domain do not verify primality of the
/// relations; callers assert it (see `assert_domain`).
class CoordinateRing {
 public:
  static RingPtr make(std::vector<std::string> names,
                      std::vector<Polynomial> relations = {},
                      MonomialOrder order = MonomialOrder::degrevlex());
  /// Convenience: relations given in the ASCII polynomial grammar.
  static RingPtr make(std::vector<std::string> names, const std::vector<std::string>& relations,
                      MonomialOrder order = MonomialOrder::degrevlex());

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// Reduced Groebner basis of the relations under `order()`.
  const std::vector<Polynomial>& relation_basis() const { return relation_basis_; }
  bool is_free() const { return relation_basis_.empty(); }

  std::size_t index_of(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(const Rational& c) const;
  Polynomial var(std::size_t i) const;
  Polynomial var(const std::string& name) const;
  /// Parse an expression in this ring's variables and reduce it.
  Polynomial parse(const std::string& text) const;

  Polynomial reduce(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool equal(const Polynomial& f, const Polynomial& g) const;
  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;

  /// A point lies on the variety when every relation vanishes there.
  bool contains_point(std::span<const Rational> point) const;

  /// Same variables and relations under another order.
  RingPtr with_order(MonomialOrder order) const;

  std::string format(const Polynomial& f) const { return f.to_string(names_); }
  std::string header() const;

 private:
  CoordinateRing() = default;
  void check(const Polynomial& f) const;

  std::vector<std::string> names_;
  OrderPtr order_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> relation_basis_;
};

/// Binary arithmetic dispatch of `poly_arith`.
enum class ArithOp { kAdd, kSub, kMul };
Polynomial poly_arith(const CoordinateRing& ring, const Polynomial& f, const Polynomial& g,
                      ArithOp op);

/// Substitution `f(images)`; images must share a variable count.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Ring homomorphism source -> target given by the images of the source
/// variables. Construction rejects maps that do not send the source
/// relations to zero.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

  static RingMap identity(const RingPtr& ring);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& f) const;
  /// Jacobian matrix d(image_i)/d(target_j), rows indexed by source variables.
  std::vector<std::vector<Polynomial>> jacobian() const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
};

Polynomial apply_map(const RingMap& phi, const Polynomial& f);

/// Free polynomial ring with the given names and order.
RingPtr free_ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex());

}  // namespace sheafforge
