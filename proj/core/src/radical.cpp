#include <algorithm>
#include <set>
#include <stdexcept>

#include "internal.hpp"
#include "sheafforge/ideal.hpp"

namespace sheafforge {

Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("poly_lcm: zero argument");
  auto meet = internal::free_intersect({f}, {g}, f.nvars(), f.order());
  if (meet.size() != 1) throw std::logic_error("poly_lcm: intersection of principal ideals not principal");
  return meet.front();
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.nvars(), 1, f.order());
  auto q = (f * g).divide_exact(poly_lcm(f, g));
  if (!q) throw std::logic_error("poly_gcd: lcm does not divide the product");
  return q->monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) return f.monic();
  Polynomial g = f;
  for (std::size_t v = 0; v < f.nvars() && !g.is_constant(); ++v) {
    if (f.involves(v)) g = poly_gcd(g, f.derivative(v));
  }
  auto q = f.divide_exact(g);
  return q->monic();
}

namespace {

bool is_monomial_ideal(const std::vector<Polynomial>& basis) {
  return std::all_of(basis.begin(), basis.end(), [](const Polynomial& p) { return p.terms().size() == 1; });
}

// Generator of I meet Q[x_v] for a zero-dimensional I.
Polynomial univariate_in(const std::vector<Polynomial>& basis, std::size_t v, std::size_t n, const OrderPtr& order) {
  std::vector<std::size_t> to_back(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != v) to_back[i] = next++;
  }
  to_back[v] = n - 1;
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[to_back[i]] = i;
  OrderPtr big = default_order();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : basis) gens.push_back(g.remap(n, to_back, big));
  auto elim = eliminate_leading(gens, n, n - 1, MonomialOrder::degrevlex());
  if (elim.empty()) throw std::logic_error("radical: ideal is not zero-dimensional");
  return elim.front().remap(n, inverse, order);
}

}  // namespace

Ideal radical(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  if (!ring->is_free()) throw std::domain_error("radical: only free polynomial rings are supported");
  const auto& basis = ideal.basis();
  if (basis.size() == 1) return Ideal(ring, {squarefree_part(basis.front())});
  if (is_monomial_ideal(basis)) {
    std::set<std::vector<int>> supports;
    for (const Polynomial& p : basis) {
      std::vector<int> s;
      for (int e : p.leading_monomial().exponents()) s.push_back(e > 0 ? 1 : 0);
      supports.insert(s);
    }
    std::vector<Polynomial> gens;
    for (const auto& s : supports) gens.push_back(Polynomial::monomial(Monomial(s), 1, ring->order()));
    return Ideal(ring, std::move(gens));
  }
  if (dimension(ideal).dim == 0) {
    std::vector<Polynomial> gens = ideal.generators();
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      gens.push_back(squarefree_part(univariate_in(basis, v, ring->nvars(), ring->order())));
    }
    return Ideal(ring, std::move(gens));
  }
  throw std::domain_error("radical: unsupported ideal " + ideal.to_string());
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  OrderPtr big = default_order();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : internal::with_relations(*ring, ideal.generators())) {
    gens.push_back(internal::shift(g, 1, big));
  }
  Polynomial u = Polynomial::variable(n + 1, 0, big);
  gens.push_back(Polynomial::constant(n + 1, 1, big) - u * internal::shift(f, 1, big));
  auto gb = groebner_basis(gens, n + 1, *big);
  return gb.size() == 1 && gb.front().is_constant();
}

}  // namespace sheafforge
