#pragma once

// Independent reference computations used to check the library. None of
// these touch the Groebner engine.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sheafforge/module.hpp"
#include "sheafforge/ring.hpp"

namespace oracle {

using sheafforge::Monomial;
using sheafforge::Polynomial;
using sheafforge::Rational;
using sheafforge::RingPtr;

// All monomials of degree <= d lying in the monomial ideal, by closing the
// generators under multiplication by variables.
inline std::set<std::vector<int>> staircase(const std::vector<Monomial>& gens, std::size_t nvars, int d) {
  std::set<std::vector<int>> in;
  std::vector<std::vector<int>> frontier;
  for (const Monomial& g : gens) {
    if (g.degree() > d) continue;
    std::vector<int> e(g.exponents().begin(), g.exponents().end());
    if (in.insert(e).second) frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<int> e = frontier.back();
    frontier.pop_back();
    int deg = 0;
    for (int k : e) deg += k;
    if (deg == d) continue;
    for (std::size_t v = 0; v < nvars; ++v) {
      std::vector<int> f = e;
      ++f[v];
      if (in.insert(f).second) frontier.push_back(f);
    }
  }
  return in;
}

// A polynomial lies in a monomial ideal iff each of its terms does.
inline bool monomial_ideal_contains(const Polynomial& f, const std::vector<Monomial>& gens) {
  int d = std::max(0, f.total_degree());
  auto in = staircase(gens, f.nvars(), d);
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const sheafforge::Term& t) {
    return in.count(std::vector<int>(t.monomial.exponents().begin(), t.monomial.exponents().end())) > 0;
  });
}

inline Rational random_coeff(std::mt19937& rng, int bound = 5) {
  std::uniform_int_distribution<int> c(-bound, bound);
  int v = 0;
  while (v == 0) v = c(rng);
  return Rational(v);
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<int> e(nvars, 0);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (int i = 0; i < d; ++i) ++e[var(rng)];
  return Monomial(std::move(e));
}

inline Polynomial random_polynomial(std::mt19937& rng, const RingPtr& r, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  Polynomial f = r->zero();
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    f += Polynomial::monomial(random_monomial(rng, r->nvars(), max_degree), random_coeff(rng), r->order());
  }
  return r->reduce(f);
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
  std::vector<Rational> p;
  std::uniform_int_distribution<int> c(-4, 4);
  for (std::size_t i = 0; i < n; ++i) p.push_back(Rational(c(rng)) / Rational(1 + (c(rng) + 4) % 3));
  return p;
}

// sum_i gens[i] * col[i] == 0 in the ring: the column is a syzygy.
inline bool annihilates(const RingPtr& r, const std::vector<Polynomial>& gens, const sheafforge::Vec& col) {
  Polynomial s = r->zero();
  for (std::size_t i = 0; i < gens.size(); ++i) s += gens[i] * col[i];
  return r->is_zero(s);
}

// Matrix product A * B (both stored by columns) vanishes in the ring.
inline bool composes_to_zero(const RingPtr& r, std::size_t rows, const std::vector<sheafforge::Vec>& a,
                             const std::vector<sheafforge::Vec>& b) {
  for (const sheafforge::Vec& col : b) {
    for (std::size_t i = 0; i < rows; ++i) {
      Polynomial s = r->zero();
      for (std::size_t k = 0; k < a.size(); ++k) s += a[k][i] * col[k];
      if (!r->is_zero(s)) return false;
    }
  }
  return true;
}

}  // namespace oracle
