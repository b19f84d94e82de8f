#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sheafforge/ideal.hpp"
#include "sheafforge/module.hpp"

namespace sheafforge {

/// The linear fiber space of coker(M) as an ideal of base[z_1..z_b]:
/// h_j = sum_i M_ij z_i for each relation column j.
///
/// The joint ring lists the base variables first, then the fiber
/// variables; its order weighs each z by 1 and the base by 0, degrevlex
/// breaking ties, so Groebner bases respect the z-degree.
struct LinearSpaceIdeal {
  RingPtr base_ring;
  RingPtr joint_ring;
  std::vector<std::string> fiber_vars;
  Ideal ideal;
  Presentation source;

  std::size_t base_nvars() const { return base_ring->nvars(); }
  std::size_t fiber_nvars() const { return fiber_vars.size(); }
  /// Base polynomial as an element of the joint ring.
  Polynomial embed(const Polynomial& f) const;
  /// The fiber variable z_{i+1}.
  Polynomial z(std::size_t i) const;
};

LinearSpaceIdeal linear_space_ideal(const Presentation& p);

/// Largest total degree in the fiber variables (-1 for zero).
int z_degree(const Polynomial& f, std::size_t base_nvars);

struct PrimaryComponentIdeal {
  Ideal ideal;             // in the joint ring
  Ideal saturating_ideal;  // in the base ring
  std::size_t base_nvars = 0;
  int exponent = 0;        // largest saturation exponent over the generators
};

/// Intersection over the generators g of `sing` of (L : g^inf). Throws
/// std::invalid_argument when sing is zero.
PrimaryComponentIdeal primary_component(const LinearSpaceIdeal& l, const Ideal& sing);
/// Uses the singular locus of the source, joined with the singular locus of
/// the base when the base ring has relations.
PrimaryComponentIdeal primary_component(const LinearSpaceIdeal& l);
/// Jacobian ideal of the base relations (relations plus maximal minors).
Ideal base_singular_ideal(const RingPtr& ring);

/// Reduced basis elements of z-degree >= 2 all lie in the ideal of the
/// elements of z-degree <= 1.
bool pc_is_linear(const PrimaryComponentIdeal& pc);

struct ReducednessVerdict {
  bool confirmed = false;
  bool g_in_j = false;   // must be false
  bool gk_in_j = false;  // must be true
  std::string detail;
};
ReducednessVerdict reducedness_witness(const Ideal& j, const Polynomial& g, int k);

/// Serre's criterion for V(f): the Jacobian locus (f, df/dv_i) must have
/// codimension >= 2 inside V(f). Free base ring; f is taken as squarefree.
bool is_normal_hypersurface(const RingPtr& ring, const Polynomial& f);

}  // namespace sheafforge
