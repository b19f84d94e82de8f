#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sheafforge/ideal.hpp"
#include "sheafforge/module.hpp"
#include "sheafforge/ring.hpp"

namespace sheafforge {

/// Gluing from one chart into another: each variable of the source chart
/// equals numerator / d^power in the target chart, d being the target
/// variable `denominator`.
struct Overlap {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t denominator = 0;
  std::vector<Polynomial> numerators;
  std::vector<int> powers;
};

/// Rewrites f from chart `from` in the coordinates of chart `to`, multiplied
/// by d^clear. Throws if `clear` is too small to make the result polynomial.
Polynomial transfer(const Overlap& o, const Polynomial& f, int clear, const CoordinateRing& target);
/// The least `clear` that makes `transfer` polynomial.
int transfer_power(const Overlap& o, const Polynomial& f);

struct Chart {
  RingPtr ring;
  RingMap to_base;                         // base -> chart: the coordinates of the projection
  Ideal exceptional;                       // zero ideal for finite maps
  std::optional<std::size_t> exceptional_var;
  std::vector<Overlap> overlaps;           // into every other chart
};

enum class ModificationKind { kBlowupOrigin, kBlowupSubspace, kFiniteMap };

struct Modification {
  ModificationKind kind = ModificationKind::kBlowupOrigin;
  std::size_t n = 0;  // base dimension (blow-ups)
  std::size_t s = 0;  // codimension of the center (blow-ups)
  RingPtr base;
  std::vector<Chart> charts;
  std::vector<Polynomial> finite_basis;  // target generators over the source (finite maps)

  std::string describe() const;
};

/// Base variable names used by the blow-up constructors: x; x, y; x, y, z;
/// then x1..xn.
std::vector<std::string> base_names(std::size_t n);

/// Blow-up of affine n-space along {x_1 = ... = x_s = 0}. Chart i (i <= s)
/// keeps x_i and sends x_j = x_i t_j for the other j <= s. For n = 2 the
/// charts are (x, t) and (s, y).
Modification blowup_coordinate_subspace(std::size_t n, std::size_t s);
Modification blowup_origin(std::size_t n);
/// One chart; `basis` generates the target as a module over the source.
Modification finite_map(const RingMap& phi, std::vector<Polynomial> basis);

/// Per-chart presentation with every matrix entry (and ideal generator)
/// pulled back.
std::vector<Presentation> pullback(const Presentation& p, const Modification& m);

struct ChartTransform {
  Presentation presentation;               // pullback modulo torsion
  std::vector<FreeElement> torsion;        // torsion classes that were removed
  std::optional<Ideal> transform_ideal;    // image in the chart ring, for ideal input
  bool transform_matches = true;           // presentation presents transform_ideal
};
std::vector<ChartTransform> torsion_free_pullback(const Presentation& p, const Modification& m);
/// Per chart, the induced map between torsion-free pullbacks (torsion maps
/// into torsion, so the images pass to the quotients).
std::vector<ModuleMap> torsion_free_pullback(const ModuleMap& f, const Modification& m);
/// Chart ideals of the torsion-free pullback of an ideal.
std::vector<Ideal> transform_ideals(const Ideal& ideal, const Modification& m);

/// phi^{-1}(K) for K an ideal of phi.target(), by elimination.
Ideal contraction(const Ideal& k, const RingMap& phi);

/// Chart ideals agree on overlaps: each transfers into the saturation of
/// the other by the overlap denominator.
bool charts_compatible(const std::vector<Ideal>& chart_ideals, const Modification& m);
/// Intersection of the contractions. Throws std::invalid_argument when the
/// chart ideals disagree on an overlap.
Ideal pushforward_ideal(const std::vector<Ideal>& chart_ideals, const Modification& m);

/// Compatibility used for pairs of chart elements in truncated sections.
/// kPointwise: the difference vanishes fiberwise on the reduced linear space
/// (rank of [M | v] equals rank of M at every point of the overlap).
/// kStrict: the difference lies in the relation image.
enum class SectionsMode { kPointwise, kStrict };

struct SectionsResult {
  Ideal image;            // in the base ring
  bool stable = false;    // same image at bound D - 1
  int degree_bound = 0;
  int laurent_bound = 0;  // N, the power of the overlap denominator cleared
  std::size_t section_count = 0;
};

/// Sections over both charts of the plane blow-up of total chart degree
/// <= D, for modules pulled back from the base (generators glue by the
/// identity). Each chart presentation must carry ideal generators; the
/// result is the image of the sections in the base fraction field.
SectionsResult truncated_global_sections(const std::vector<Presentation>& charts, const Modification& m, int degree_bound,
                                         SectionsMode mode = SectionsMode::kPointwise);
/// Same for chart ideals glued as functions.
SectionsResult truncated_global_sections(const std::vector<Ideal>& chart_ideals, const Modification& m, int degree_bound);

/// Restriction of scalars along a finite map: a presentation over the
/// source on b * L generators g_{k,l} -> basis_l e_k.
Presentation pushforward_finite(const Presentation& p, const Modification& m);

struct DivisorOnBlowup {
  std::vector<int> multiplicity;  // per chart
};
/// Order of the exceptional variable in the Jacobian determinant of each
/// chart. Blow-ups only.
DivisorOnBlowup canonical_multiplicity(const Modification& m);

/// Largest k with var^k dividing f.
int variable_order(const Polynomial& f, std::size_t var);

struct ChainReport {
  Ideal sheaf;
  Ideal sections;             // image of the truncated sections of the pullback
  Ideal transform;            // pushforward of the torsion-free pullback
  bool sections_stable = false;
  bool sheaf_in_sections = false;
  bool sections_in_transform = false;
  bool first_strict = false;
  bool second_strict = false;
  std::optional<Polynomial> first_witness;   // in sections, not in the sheaf
  std::optional<Polynomial> second_witness;  // in transform, not in sections
  /// Per chart exceptional multiplicity when the transform is u^d times a unit.
  std::optional<DivisorOnBlowup> divisor;
  bool holds() const { return sheaf_in_sections && sections_in_transform; }
};
/// The chain S in pi_* pi^* S in pi_* pi^T S for an ideal sheaf on the plane
/// blow-up.
ChainReport verify_injection_chain(const Presentation& p, const Modification& m, int degree_bound);

struct TopFormsReport {
  DivisorOnBlowup divisor;       // pi^T pi_* Omega^n = Omega^n(-D)
  std::vector<bool> cofactor_unit;
  bool holds() const;
};
/// For E = Omega^n on a blow-up: pi_* E = O, and per chart the pulled-back
/// volume form is u^d times a unit times the chart volume form.
TopFormsReport verify_injection_chain_top_forms(const Modification& m);

}  // namespace sheafforge
