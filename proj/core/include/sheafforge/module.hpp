#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sheafforge/groebner.hpp"
#include "sheafforge/ideal.hpp"
#include "sheafforge/ring.hpp"

namespace sheafforge {

/// A vector in a free module R^b.
struct FreeElement {
  RingPtr ring;
  Vec coords;
};

/// S = coker(M : R^a -> R^b). The matrix is stored by columns (relations),
/// each of length b. When S is given as an ideal, `ideal_generators` holds
/// the images of the b generators in R, i.e. the map S -> R.
class Presentation {
 public:
  Presentation(RingPtr ring, std::size_t num_generators, std::vector<Vec> relations,
               std::optional<std::vector<Polynomial>> ideal_generators = std::nullopt);

  static Presentation free(RingPtr ring, std::size_t rank);

  const RingPtr& ring() const { return ring_; }
  std::size_t num_generators() const { return b_; }
  std::size_t num_relations() const { return relations_.size(); }
  const std::vector<Vec>& relations() const { return relations_; }
  const Vec& column(std::size_t j) const { return relations_.at(j); }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return relations_.at(j).at(i); }
  const std::optional<std::vector<Polynomial>>& ideal_generators() const { return ideal_generators_; }
  Presentation with_ideal_generators(std::optional<std::vector<Polynomial>> gens) const;

  /// Unit vector e_i of the free module R^b.
  Vec basis_vector(std::size_t i) const;
  Vec zero_vector() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t b_;
  std::vector<Vec> relations_;
  std::optional<std::vector<Polynomial>> ideal_generators_;
};

/// Submodule of R^rank together with its Groebner basis (POT order). The
/// ring relations are adjoined as rel * e_i.
class Submodule {
 public:
  Submodule(RingPtr ring, std::size_t rank, std::vector<Vec> generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Vec>& generators() const { return generators_; }
  const ModuleBasis& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Submodule& other) const;
  Vec normal_form(const Vec& v) const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<Vec> generators_;
  ModuleBasis basis_;
};

// ---- vector helpers --------------------------------------------------------

Vec reduce_vec(const CoordinateRing& ring, const Vec& v);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Polynomial& c, const Vec& v);
/// Column combination M * c.
Vec apply_matrix(const std::vector<Vec>& columns, std::size_t rows, const Vec& c, const CoordinateRing& ring);
/// Scaled so that its position-over-term leading coefficient is 1.
Vec normalize_vec(const Vec& v);
int vec_degree(const Vec& v);

/// Drops zero vectors and vectors lying in the span of the others (plus the
/// ring relations), processing by increasing degree. Irredundant always;
/// minimal in number for graded input.
std::vector<Vec> minimalize_generators(const RingPtr& ring, std::size_t rank, std::vector<Vec> gens,
                                       const std::vector<Vec>& ambient = {});

/// Kernel of R^k -> R^b / (ambient + relations), e_i -> vectors[i]. With
/// `minimal` the generators are made irredundant.
std::vector<Vec> kernel_modulo(const RingPtr& ring, std::size_t b, const std::vector<Vec>& vectors,
                               const std::vector<Vec>& ambient, bool minimal = true);

/// (N : f) = {v : f v in N} for N a submodule of R^b.
std::vector<Vec> module_quotient(const RingPtr& ring, std::size_t b, const std::vector<Vec>& module,
                                 const Polynomial& f);

struct ModuleSaturation {
  std::vector<Vec> generators;  // generators of (N : f^inf)
  int exponent = 0;             // least k with (N : f^k) = (N : f^inf)
};
ModuleSaturation module_saturate(const RingPtr& ring, std::size_t b, const std::vector<Vec>& module,
                                 const Polynomial& f);

/// Mutual containment of two submodules of R^b.
bool same_submodule(const RingPtr& ring, std::size_t b, const std::vector<Vec>& a, const std::vector<Vec>& c);

// ---- presentations ----------------------------------------------------------

/// Kernel of R^k -> R^b sending e_i to vectors[i]; returned as a
/// presentation with k generators whose columns are the syzygies.
Presentation syzygies(const std::vector<FreeElement>& vectors);
Presentation syzygies(const RingPtr& ring, std::size_t b, const std::vector<Vec>& vectors);

/// Ideal (g_1..g_k) presented by its syzygy matrix. Throws on all-zero input.
Presentation presentation_of_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Determinant of a square matrix given by columns, reduced in the ring.
Polynomial determinant(const std::vector<Vec>& columns, const CoordinateRing& ring);
/// All k x k minors of the b x a matrix (rows x columns).
std::vector<Polynomial> minors(const Presentation& p, std::size_t k);

/// b - rank over the fraction field. Assumes the ring is a domain.
int generic_rank(const Presentation& p);
/// b - rank M(p) over Q. Throws if the point is not on the variety.
int min_generators_at(const Presentation& p, const std::vector<Rational>& point);
/// Rank of a rational matrix (rows of entries).
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// Ideal of (b-k) x (b-k) minors: unit when b-k <= 0, zero when b-k exceeds
/// the number of relations.
Ideal fitting_ideal(const Presentation& p, int k);

struct TorsionResult {
  std::vector<FreeElement> torsion_generators;  // coset representatives in R^b
  Presentation quotient;                        // presents S / T(S)
  std::vector<Polynomial> witnesses;            // witness[i] * generator[i] in im M
  std::optional<Polynomial> saturating_element; // the f with T = (0 :_S f^inf)
  int exponent = 0;
  bool whole_module = false;  // S = T(S)
};

/// T(S) = (0 :_S f^inf) for f a least-degree generator of Fitt_rank(S).
/// Assumes the ring is a domain.
TorsionResult torsion_submodule(const Presentation& p);
bool is_torsion_free(const Presentation& p);

struct SingularLocus {
  Ideal ideal;
  DimensionInfo info;
  bool torsion_adjusted = false;  // intersected with the torsion witnesses
};
/// V(Fitt_rank), unioned with V(annihilator witnesses) when S has torsion.
SingularLocus singular_locus(const Presentation& p);

/// Removes constant (unit) pivots and redundant columns. The module is
/// unchanged up to isomorphism; generator images are dropped because the
/// generator set changes.
Presentation prune(const Presentation& p);

/// Columns of the presentation matrix are the first map; each following map
/// presents the kernel of the previous one. Matrices are stored by columns.
struct FreeResolution {
  std::vector<std::vector<Vec>> maps;
  std::vector<std::size_t> ranks;  // ranks[i] = rank of F_i
  bool complete = false;           // false when the length bound ran out
  bool graded = true;              // minimality is certified only for graded input
  std::size_t length() const { return maps.size(); }
};
FreeResolution free_resolution(const Presentation& p, std::size_t length_bound);
/// nullopt when the length bound is exhausted before the resolution ends.
std::optional<bool> hom_dim_le_1_at_origin(const Presentation& p, std::size_t length_bound = 8);

Presentation tensor_presentation(const Presentation& p, const Presentation& q);

struct ClassifyReport {
  int rank = 0;
  int corank_at_point = 0;
  int min_generators_at_point = 0;
  Ideal singular_locus;
  int sing_codim = 0;
  bool is_torsion_free = false;
  bool hom_dim_le_1 = false;
  bool hom_dim_conclusive = true;
  /// Corank <= 2, codim Sing > corank, smooth factorial base.
  bool hypotheses_hold = false;
  /// (torsion-free) <=> (hom-dim <= 1); empty when the hypotheses fail.
  std::optional<bool> thm12_consistent;
  bool domain_asserted = true;
  std::vector<std::string> notes;
};
ClassifyReport classify_sheaf(const Presentation& p, const std::vector<Rational>& point);

/// Morphism coker(M_src) -> coker(M_dst) given by the images of the source
/// generators (columns of length dst.num_generators()).
struct ModuleMap {
  Presentation source;
  Presentation target;
  std::vector<Vec> images;
};
/// Generators of the kernel modulo im M_src; empty iff injective.
std::vector<Vec> kernel_of(const ModuleMap& f);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);

}  // namespace sheafforge
