#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sheafforge/modification.hpp"

namespace sheafforge {

namespace {

// One coefficient of a chart element: `conditions` is its contribution to
// the overlap constraints, `value` its contribution to the image function
// (zero for second-chart unknowns).
struct Unknown {
  std::vector<Polynomial> conditions;
  Polynomial value;
};

struct Solved {
  std::vector<Polynomial> values;
  std::size_t count = 0;
};

// Nullspace of the linear map sending unknown i to its conditions, pushed
// through the value map.
Solved solve(const std::vector<Unknown>& unknowns, const CoordinateRing& chart) {
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(unknowns.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    for (std::size_t c = 0; c < unknowns[j].conditions.size(); ++c) {
      for (const Term& t : unknowns[j].conditions[c].terms()) {
        std::pair<std::size_t, std::vector<int>> key(c, std::vector<int>(t.monomial.exponents().begin(), t.monomial.exponents().end()));
        auto it = row_of.try_emplace(key, row_of.size()).first;
        columns[j].emplace_back(it->second, t.coeff);
      }
    }
  }
  const std::size_t rows = row_of.size(), cols = unknowns.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [r, v] : columns[j]) a[r][j] += v;
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  Solved out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ++out.count;
    Polynomial value = unknowns[free].value;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      if (sgn(a[i][free]) != 0) value -= unknowns[pivot_col[i]].value.scaled(a[i][free]);
    }
    value = chart.reduce(value);
    if (!value.is_zero()) out.values.push_back(std::move(value));
  }
  return out;
}

// Monomials of total degree <= d in two variables.
std::vector<Monomial> monomials_upto(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  for (int a = 0; a <= d; ++a) {
    for (int c = 0; a + c <= d; ++c) out.push_back(Monomial({a, c}));
  }
  (void)nvars;
  return out;
}

// Chart (u, t) of the plane blow-up back to the base: u^a t^c = x^(a-c) y^c.
Polynomial chart_to_base(const Polynomial& f, const CoordinateRing& base) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    int a = t.monomial[0], c = t.monomial[1];
    if (a < c) throw std::logic_error("truncated sections: section is not regular on the base");
    terms.push_back({Monomial({a - c, c}), t.coeff});
  }
  return base.reduce(Polynomial::from_terms(2, std::move(terms), base.order()));
}

void require_plane_blowup(const Modification& m) {
  if (m.kind != ModificationKind::kBlowupOrigin || m.n != 2 || m.charts.size() != 2) {
    throw std::invalid_argument("truncated sections: two-chart blow-up of the plane required");
  }
}

int max_degree(const std::vector<Vec>& cols) {
  int d = 0;
  for (const Vec& c : cols) d = std::max(d, vec_degree(c));
  return d;
}

// Linear conditions for v to vanish on the reduced linear space of the
// chart module, localized at t: every k-minor of [M | v] using v must lie in
// (rad I_k(M) : t^inf).
struct PointwiseTest {
  std::vector<Vec> cofactors;  // one per (rows, columns) choice
  std::vector<Ideal> targets;

  PointwiseTest(const Presentation& p, const Polynomial& t) {
    const RingPtr& ring = p.ring();
    const std::size_t b = p.num_generators(), a = p.num_relations();
    for (std::size_t k = 1; k <= b; ++k) {
      Ideal ik(ring, minors(p, k));
      if (ik.is_unit()) continue;
      Ideal target = saturate(radical(ik), t).ideal;
      if (target.is_unit()) continue;
      if (k - 1 > a) continue;
      std::vector<std::size_t> rows(k), cols(k - 1);
      for_each_subset(b, k, rows, [&] {
        for_each_subset(a, k - 1, cols, [&] {
          Vec cof(b, ring->zero());
          for (std::size_t pos = 0; pos < k; ++pos) {
            std::vector<Vec> sub;
            for (std::size_t c : cols) {
              Vec col;
              for (std::size_t q = 0; q < k; ++q) {
                if (q != pos) col.push_back(p.entry(rows[q], c));
              }
              sub.push_back(std::move(col));
            }
            Polynomial d = determinant(sub, *ring);
            // v sits in the last column: sign (-1)^(pos + k - 1).
            cof[rows[pos]] = ((pos + k - 1) % 2 == 0) ? d : -d;
          }
          cofactors.push_back(std::move(cof));
          targets.push_back(target);
        });
      });
    }
  }

  template <typename F>
  static void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& idx, F&& body) {
    if (k > n) return;
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      body();
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) return;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::vector<Polynomial> conditions(const Vec& v) const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < cofactors.size(); ++i) {
      Polynomial s(v.front().nvars(), v.front().order());
      for (std::size_t r = 0; r < v.size(); ++r) s += cofactors[i][r] * v[r];
      out.push_back(targets[i].normal_form(s));
    }
    return out;
  }
};

struct ModuleSections {
  const std::vector<Presentation>& charts;
  const Modification& m;
  SectionsMode mode;

  Solved run(int d) const {
    const Presentation& p1 = charts[0];
    const RingPtr& r1 = p1.ring();
    const Overlap& o = m.charts[1].overlaps.front();
    const std::size_t b = p1.num_generators();
    const int n_clear = 2 * d + max_degree(p1.relations());
    Polynomial t = r1->var(o.denominator);
    Polynomial tn = t.pow(static_cast<unsigned>(n_clear));
    const auto& gens = *p1.ideal_generators();

    std::optional<PointwiseTest> pointwise;
    std::optional<Submodule> strict;
    if (mode == SectionsMode::kPointwise) {
      pointwise.emplace(p1, t);
    } else {
      strict.emplace(r1, b, module_saturate(r1, b, p1.relations(), t).generators);
    }
    auto conditions = [&](const Vec& v) {
      if (pointwise) return pointwise->conditions(v);
      Vec nf = strict->normal_form(v);
      return std::vector<Polynomial>(nf.begin(), nf.end());
    };

    std::vector<Unknown> unknowns;
    for (int chart = 0; chart < 2; ++chart) {
      const RingPtr& rc = charts[static_cast<std::size_t>(chart)].ring();
      for (std::size_t k = 0; k < b; ++k) {
        for (const Monomial& mono : monomials_upto(2, d)) {
          Polynomial u = Polynomial::monomial(mono, 1, rc->order());
          Vec v(b, r1->zero());
          Polynomial value = r1->zero();
          if (chart == 0) {
            v[k] = u * tn;
            value = u * gens[k];
          } else {
            v[k] = -transfer(o, u, n_clear, *r1);
          }
          unknowns.push_back({conditions(v), value});
        }
      }
    }
    return solve(unknowns, *r1);
  }
};

struct IdealSections {
  const std::vector<Ideal>& charts;
  const Modification& m;

  Solved run(int d) const {
    const RingPtr& r1 = charts[0].ring();
    const Overlap& o = m.charts[1].overlaps.front();
    int gdeg = 0;
    for (const Ideal& k : charts) {
      for (const Polynomial& g : k.generators()) gdeg = std::max(gdeg, g.total_degree());
    }
    const int n_clear = 2 * d + gdeg;
    Polynomial tn = r1->var(o.denominator).pow(static_cast<unsigned>(n_clear));
    std::vector<Unknown> unknowns;
    for (int chart = 0; chart < 2; ++chart) {
      const Ideal& k = charts[static_cast<std::size_t>(chart)];
      for (const Polynomial& g : k.generators()) {
        for (const Monomial& mono : monomials_upto(2, d)) {
          Polynomial f = g.mul_term(mono, 1);
          if (chart == 0) {
            unknowns.push_back({{r1->reduce(f * tn)}, f});
          } else {
            unknowns.push_back({{-transfer(o, f, n_clear, *r1)}, r1->zero()});
          }
        }
      }
    }
    return solve(unknowns, *r1);
  }
};

template <typename Engine>
SectionsResult run_sections(const Engine& engine, const Modification& m, int degree_bound, int laurent_extra) {
  if (degree_bound < 0) throw std::invalid_argument("truncated sections: negative degree bound");
  auto image = [&](const Solved& s) {
    std::vector<Polynomial> gens;
    for (const Polynomial& v : s.values) gens.push_back(chart_to_base(v, *m.base));
    return Ideal(m.base, Ideal(m.base, std::move(gens)).reduced_generators());
  };
  Solved top = engine.run(degree_bound);
  SectionsResult res{image(top), false, degree_bound, 2 * degree_bound + laurent_extra, top.count};
  if (degree_bound > 0) res.stable = ideal_equal(image(engine.run(degree_bound - 1)), res.image);
  return res;
}

}  // namespace

SectionsResult truncated_global_sections(const std::vector<Presentation>& charts, const Modification& m, int degree_bound,
                                         SectionsMode mode) {
  require_plane_blowup(m);
  if (charts.size() != 2) throw std::invalid_argument("truncated sections: one presentation per chart required");
  if (charts[0].num_generators() != charts[1].num_generators()) {
    throw std::invalid_argument("truncated sections: charts must share the pulled-back generators");
  }
  if (!charts[0].ideal_generators()) throw std::invalid_argument("truncated sections: ideal generators required");
  ModuleSections engine{charts, m, mode};
  return run_sections(engine, m, degree_bound, max_degree(charts[0].relations()));
}

SectionsResult truncated_global_sections(const std::vector<Ideal>& chart_ideals, const Modification& m, int degree_bound) {
  require_plane_blowup(m);
  if (chart_ideals.size() != 2) throw std::invalid_argument("truncated sections: one ideal per chart required");
  int gdeg = 0;
  for (const Ideal& k : chart_ideals) {
    for (const Polynomial& g : k.generators()) gdeg = std::max(gdeg, g.total_degree());
  }
  IdealSections engine{chart_ideals, m};
  return run_sections(engine, m, degree_bound, gdeg);
}

}  // namespace sheafforge
