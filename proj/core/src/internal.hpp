#pragma once

// Helpers shared by the ideal, module and modification sources. All of them
// work in free polynomial rings; callers adjoin ring relations themselves.

#include <cstddef>
#include <vector>

#include "sheafforge/groebner.hpp"
#include "sheafforge/polynomial.hpp"
#include "sheafforge/ring.hpp"

namespace sheafforge::internal {

/// f in n vars -> f in n + k vars, the new variables occupying indices 0..k-1.
Polynomial shift(const Polynomial& f, std::size_t k, const OrderPtr& order);
/// Inverse of `shift`; the first k variables must not occur.
Polynomial unshift(const Polynomial& f, std::size_t k, const OrderPtr& order);

/// (A) intersected with (B) in Q[x_1..x_n], as a reduced Groebner basis.
std::vector<Polynomial> free_intersect(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                       std::size_t nvars, const OrderPtr& order);

/// Generators plus the ring relations.
std::vector<Polynomial> with_relations(const CoordinateRing& ring, std::vector<Polynomial> gens);

}  // namespace sheafforge::internal
