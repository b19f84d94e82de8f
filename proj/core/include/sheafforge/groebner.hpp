#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "sheafforge/order.hpp"
#include "sheafforge/polynomial.hpp"

namespace sheafforge {

/// An element of a free module R^rank, one polynomial per coordinate.
using Vec = std::vector<Polynomial>;

/// Term order on a free module. Position-over-term ranks e_0 > e_1 > ...
/// before comparing monomials; term-over-position compares monomials first.
struct ModuleOrder {
  enum class Kind { kPositionOverTerm, kTermOverPosition };
  MonomialOrder monomial = MonomialOrder::degrevlex();
  Kind kind = Kind::kPositionOverTerm;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reductions_to_zero = 0;
};

/// Reduced Groebner basis of a submodule of R^rank (rank 1 for ideals).
///
/// Buchberger with normal (least-degree lcm) pair selection, the chain
/// criterion, and the coprime-leading-term criterion for the ideal case.
/// The result is autoreduced, monic, and sorted by decreasing leading term,
/// so it is unique for the order.
class ModuleBasis {
 public:
  ModuleBasis(const std::vector<Vec>& generators, std::size_t rank, std::size_t nvars,
              ModuleOrder order = {});

  std::size_t rank() const { return rank_; }
  std::size_t nvars() const { return nvars_; }
  const ModuleOrder& order() const { return order_; }
  const OrderPtr& monomial_order() const { return mono_; }

  const std::vector<Vec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const GroebnerStats& stats() const { return stats_; }

  /// Fully reduced normal form.
  Vec normal_form(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool is_unit() const;  // rank-1 basis equal to {1}

  /// Leading position of each basis element.
  std::size_t leading_position(std::size_t i) const;
  const Monomial& leading_monomial(std::size_t i) const;

  struct Impl;

 private:
  std::size_t rank_;
  std::size_t nvars_;
  ModuleOrder order_;
  OrderPtr mono_;
  std::shared_ptr<const Impl> impl_;
  std::vector<Vec> elements_;
  GroebnerStats stats_;
};

/// Reduced Groebner basis of the ideal generated by `gens` in the free ring,
/// computed under `order`.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, std::size_t nvars,
                                       const MonomialOrder& order);

/// Fully reduced normal form of f by a Groebner basis (no check that `basis`
/// really is one).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Generators of (gens) intersected with Q[last nvars-k variables], computed
/// under block(k, degrevlex, rest). Results keep the full variable count.
std::vector<Polynomial> eliminate_leading(const std::vector<Polynomial>& gens, std::size_t nvars,
                                          std::size_t k, const MonomialOrder& rest);

}  // namespace sheafforge
