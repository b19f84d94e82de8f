#include "sheafforge/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace sheafforge {

namespace detail {

struct MTerm {
  Monomial mono;
  std::size_t pos;
  Rational coeff;
};

// Module polynomial: terms strictly decreasing under the module order.
using MPoly = std::vector<MTerm>;

class TermOrder {
 public:
  explicit TermOrder(const ModuleOrder& order) : mono_(order.monomial), kind_(order.kind) {}

  int compare(const Monomial& a, std::size_t pa, const Monomial& b, std::size_t pb) const {
    if (kind_ == ModuleOrder::Kind::kPositionOverTerm) {
      if (pa != pb) return pa < pb ? 1 : -1;
      return mono_.compare(a, b);
    }
    if (int c = mono_.compare(a, b); c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
  int compare(const MTerm& a, const MTerm& b) const { return compare(a.mono, a.pos, b.mono, b.pos); }

 private:
  MonomialOrder mono_;
  ModuleOrder::Kind kind_;
};

MPoly to_mpoly(const Vec& v, const TermOrder& ord) {
  MPoly out;
  for (std::size_t p = 0; p < v.size(); ++p) {
    for (const Term& t : v[p].terms()) out.push_back({t.monomial, p, t.coeff});
  }
  std::sort(out.begin(), out.end(), [&](const MTerm& a, const MTerm& b) { return ord.compare(a, b) > 0; });
  return out;
}

Vec to_vec(const MPoly& p, std::size_t rank, std::size_t nvars, const OrderPtr& mono) {
  std::vector<std::vector<Term>> comps(rank);
  for (const MTerm& t : p) comps[t.pos].push_back({t.mono, t.coeff});
  Vec v;
  v.reserve(rank);
  for (auto& c : comps) v.push_back(Polynomial::from_terms(nvars, std::move(c), mono));
  return v;
}

// p[start..] - c * m * q, merged.
MPoly sub_scaled(const MPoly& p, std::size_t start, const MPoly& q, const Monomial& m, const Rational& c,
                 const TermOrder& ord) {
  MPoly out;
  out.reserve(p.size() - start + q.size());
  std::size_t a = start, b = 0;
  while (a < p.size() && b < q.size()) {
    Monomial qm = q[b].mono * m;
    int cmp = ord.compare(p[a].mono, p[a].pos, qm, q[b].pos);
    if (cmp > 0) {
      out.push_back(p[a++]);
    } else if (cmp < 0) {
      out.push_back({std::move(qm), q[b].pos, -c * q[b].coeff});
      ++b;
    } else {
      Rational s = p[a].coeff - c * q[b].coeff;
      if (!is_zero(s)) out.push_back({std::move(qm), p[a].pos, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a < p.size(); ++a) out.push_back(p[a]);
  for (; b < q.size(); ++b) out.push_back({q[b].mono * m, q[b].pos, -c * q[b].coeff});
  return out;
}

void make_monic(MPoly& p) {
  if (p.empty() || p.front().coeff == 1) return;
  Rational inv = 1 / p.front().coeff;
  for (MTerm& t : p) t.coeff *= inv;
}

}  // namespace detail

using namespace detail;

struct ModuleBasis::Impl {
  TermOrder order;
  std::vector<MPoly> basis;
  bool rank_one = false;

  explicit Impl(const ModuleOrder& o) : order(o) {}

  // Index of a basis element whose leading term divides (m, pos), skipping `skip`.
  std::ptrdiff_t find_divisor(const std::vector<MPoly>& g, const std::vector<bool>* active,
                              const Monomial& m, std::size_t pos, std::ptrdiff_t skip = -1) const {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (static_cast<std::ptrdiff_t>(i) == skip) continue;
      if (active && !(*active)[i]) continue;
      const MTerm& lt = g[i].front();
      if (lt.pos == pos && lt.mono.divides(m)) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  }

  MPoly reduce(MPoly p, const std::vector<MPoly>& g, const std::vector<bool>* active = nullptr,
               std::ptrdiff_t skip = -1) const {
    MPoly rem;
    std::size_t start = 0;
    while (start < p.size()) {
      const MTerm& lt = p[start];
      std::ptrdiff_t d = find_divisor(g, active, lt.mono, lt.pos, skip);
      if (d < 0) {
        rem.push_back(lt);
        ++start;
        continue;
      }
      const MPoly& q = g[static_cast<std::size_t>(d)];
      Monomial m = lt.mono.quotient(q.front().mono);
      Rational c = lt.coeff / q.front().coeff;
      p = sub_scaled(p, start, q, m, c, order);
      start = 0;
    }
    return rem;
  }
};

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

}  // namespace

ModuleBasis::ModuleBasis(const std::vector<Vec>& generators, std::size_t rank, std::size_t nvars,
                         ModuleOrder order)
    : rank_(rank), nvars_(nvars), order_(std::move(order)), mono_(make_order(order_.monomial)) {
  auto impl = std::make_shared<Impl>(order_);
  impl->rank_one = rank == 1;
  const TermOrder& ord = impl->order;

  std::vector<MPoly> inputs;
  for (const Vec& v : generators) {
    if (v.size() != rank) throw std::invalid_argument("ModuleBasis: generator has wrong rank");
    for (const Polynomial& p : v) {
      if (p.nvars() != nvars) throw std::invalid_argument("ModuleBasis: variable-count mismatch");
    }
    MPoly m = to_mpoly(v, ord);
    if (!m.empty()) inputs.push_back(std::move(m));
  }
  // Feed low leading terms first: they tend to reduce the later ones.
  std::sort(inputs.begin(), inputs.end(),
            [&](const MPoly& a, const MPoly& b) { return ord.compare(a.front(), b.front()) < 0; });

  std::vector<MPoly> g;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  bool unit = false;

  auto add = [&](MPoly h) {
    make_monic(h);
    std::size_t idx = g.size();
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].front().pos != h.front().pos) continue;
      Monomial l = g[k].front().mono.lcm(h.front().mono);
      int deg = l.degree();
      pairs.push_back({k, idx, std::move(l), deg});
      pending.insert({k, idx});
    }
    if (rank == 1 && h.front().mono.is_one()) unit = true;
    g.push_back(std::move(h));
  };

  for (MPoly& in : inputs) {
    if (unit) break;
    MPoly r = impl->reduce(std::move(in), g);
    if (!r.empty()) add(std::move(r));
  }

  while (!pairs.empty() && !unit) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return ord.compare(a.lcm, 0, b.lcm, 0) < 0;
    });
    Pair pr = std::move(*best);
    *best = std::move(pairs.back());
    pairs.pop_back();
    pending.erase({pr.i, pr.j});
    ++stats_.pairs_considered;

    const MPoly& gi = g[pr.i];
    const MPoly& gj = g[pr.j];
    if (rank == 1 && gi.front().mono.coprime(gj.front().mono)) {
      ++stats_.pairs_skipped;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (g[k].front().pos != gi.front().pos) continue;
      if (!g[k].front().mono.divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (pending.count(key(pr.i, k)) || pending.count(key(pr.j, k))) continue;
      chain = true;
    }
    if (chain) {
      ++stats_.pairs_skipped;
      continue;
    }

    Monomial mi = pr.lcm.quotient(gi.front().mono);
    MPoly left;
    left.reserve(gi.size());
    for (const MTerm& t : gi) left.push_back({t.mono * mi, t.pos, t.coeff});
    MPoly s = sub_scaled(left, 0, gj, pr.lcm.quotient(gj.front().mono), 1, ord);
    MPoly r = impl->reduce(std::move(s), g);
    if (r.empty()) {
      ++stats_.reductions_to_zero;
      continue;
    }
    add(std::move(r));
  }

  std::vector<MPoly> result;
  if (unit) {
    MPoly one{{Monomial(nvars), 0, Rational(1)}};
    result.push_back(std::move(one));
  } else {
    std::vector<bool> keep(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
        if (i == j || !keep[j]) continue;
        const MTerm& a = g[i].front();
        const MTerm& b = g[j].front();
        if (a.pos == b.pos && b.mono.divides(a.mono)) keep[i] = false;
      }
    }
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (keep[i]) minimal.push_back(std::move(g[i]));
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      MPoly tail(minimal[i].begin() + 1, minimal[i].end());
      MPoly red = impl->reduce(std::move(tail), minimal, nullptr, static_cast<std::ptrdiff_t>(i));
      MPoly full;
      full.reserve(red.size() + 1);
      full.push_back(minimal[i].front());
      for (MTerm& t : red) full.push_back(std::move(t));
      result.push_back(std::move(full));
    }
    for (MPoly& p : result) make_monic(p);
    std::sort(result.begin(), result.end(),
              [&](const MPoly& a, const MPoly& b) { return ord.compare(a.front(), b.front()) > 0; });
  }

  for (const MPoly& p : result) elements_.push_back(to_vec(p, rank, nvars, mono_));
  impl->basis = std::move(result);
  impl_ = std::move(impl);
}

Vec ModuleBasis::normal_form(const Vec& v) const {
  if (v.size() != rank_) throw std::invalid_argument("normal_form: wrong rank");
  MPoly p = to_mpoly(v, impl_->order);
  return to_vec(impl_->reduce(std::move(p), impl_->basis), rank_, nvars_, mono_);
}

bool ModuleBasis::contains(const Vec& v) const {
  if (v.size() != rank_) throw std::invalid_argument("contains: wrong rank");
  MPoly p = to_mpoly(v, impl_->order);
  return impl_->reduce(std::move(p), impl_->basis).empty();
}

bool ModuleBasis::is_unit() const {
  return rank_ == 1 && impl_->basis.size() == 1 && impl_->basis.front().front().mono.is_one();
}

std::size_t ModuleBasis::leading_position(std::size_t i) const { return impl_->basis.at(i).front().pos; }

const Monomial& ModuleBasis::leading_monomial(std::size_t i) const { return impl_->basis.at(i).front().mono; }

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, std::size_t nvars,
                                       const MonomialOrder& order) {
  std::vector<Vec> vs;
  vs.reserve(gens.size());
  for (const Polynomial& p : gens) vs.push_back({p});
  ModuleBasis gb(vs, 1, nvars, ModuleOrder{order, ModuleOrder::Kind::kPositionOverTerm});
  std::vector<Polynomial> out;
  for (const Vec& v : gb.elements()) out.push_back(v[0]);
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (basis.empty() || f.is_zero()) return f;
  ModuleBasis::Impl reducer(ModuleOrder{*f.order(), ModuleOrder::Kind::kPositionOverTerm});
  std::vector<MPoly> g;
  g.reserve(basis.size());
  for (const Polynomial& b : basis) {
    if (!b.is_zero()) g.push_back(to_mpoly({b}, reducer.order));
  }
  MPoly r = reducer.reduce(to_mpoly({f}, reducer.order), g);
  return to_vec(r, 1, f.nvars(), f.order())[0];
}

std::vector<Polynomial> eliminate_leading(const std::vector<Polynomial>& gens, std::size_t nvars,
                                          std::size_t k, const MonomialOrder& rest) {
  MonomialOrder ord = MonomialOrder::block(k, MonomialOrder::degrevlex(), rest);
  std::vector<Polynomial> out;
  for (Polynomial& p : groebner_basis(gens, nvars, ord)) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = !p.involves(v);
    if (free) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace sheafforge
