#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sheafforge/groebner.hpp"
#include "sheafforge/ring.hpp"

namespace sheafforge {

/// Ideal of a coordinate ring. Generators are stored in normal form modulo
/// the ring relations (zeros dropped). The Groebner basis under the ring
/// order is computed once on first use and shared between copies.
///
/// Internally every computation runs in the free ring on generators plus
/// relations, so the basis returned by `basis()` may contain relation
/// elements.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced Groebner basis of (generators + relations) in the free ring.
  const std::vector<Polynomial>& basis() const;
  /// Reduced basis elements that are nonzero modulo the relations.
  std::vector<Polynomial> reduced_generators() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

struct DimensionInfo {
  int dim = 0;    // -1 for the unit ideal
  int codim = 0;  // dim + codim = dimension of the coordinate ring
};

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order);
bool membership(const Polynomial& f, const Ideal& ideal);
/// Mutual containment of generators.
bool ideal_equal(const Ideal& a, const Ideal& b);

enum class IdealOp { kSum, kProduct, kIntersect, kQuotient };
Ideal ideal_ops(const Ideal& a, const Ideal& b, IdealOp op);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);
/// (I : g); g = 0 gives the unit ideal.
Ideal quotient(const Ideal& ideal, const Polynomial& g);
/// (I : J) as the intersection of (I : g) over the generators of J.
Ideal quotient(const Ideal& ideal, const Ideal& by);

struct SaturationResult {
  Ideal ideal;
  int exponent = 0;  // least k with (I : f^k) = (I : f^inf)
};

/// (I : f^inf) via I + (1 - u f) with u eliminated; the exponent comes from
/// iterated quotients. Throws std::invalid_argument if f = 0.
SaturationResult saturate(const Ideal& ideal, const Polynomial& f);
/// Intersection over the generators g of J of (I : g^inf); the exponent is
/// the largest per-generator exponent.
SaturationResult saturate(const Ideal& ideal, const Ideal& by);
/// (I : f^k) by k iterated quotients.
Ideal quotient_power(const Ideal& ideal, const Polynomial& f, int k);

/// I intersected with the subring on the variables not in `drop`. The result
/// lives in the same ring; its generators avoid the dropped variables.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t> drop);

DimensionInfo dimension(const Ideal& ideal);
/// Krull dimension of the coordinate ring itself.
int ring_dimension(const CoordinateRing& ring);

/// Radical of an ideal of a free polynomial ring, for the cases this library
/// needs: zero, unit, principal and monomial ideals, and zero-dimensional
/// ideals. Other inputs throw std::domain_error.
Ideal radical(const Ideal& ideal);
/// f in rad(I), by 1 in I + (1 - u f).
bool radical_membership(const Polynomial& f, const Ideal& ideal);
/// Generator of (f) intersected with (g); both nonzero, free ring.
Polynomial poly_lcm(const Polynomial& f, const Polynomial& g);
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
/// f divided by gcd(f, df/dv_1, ..., df/dv_n).
Polynomial squarefree_part(const Polynomial& f);

}  // namespace sheafforge
