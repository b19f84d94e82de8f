#include "sheafforge/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sheafforge {

Presentation::Presentation(RingPtr ring, std::size_t num_generators, std::vector<Vec> relations,
                           std::optional<std::vector<Polynomial>> ideal_generators)
    : ring_(std::move(ring)), b_(num_generators) {
  for (Vec& col : relations) {
    if (col.size() != b_) throw std::invalid_argument("Presentation: column length differs from generator count");
    relations_.push_back(reduce_vec(*ring_, col));
  }
  if (ideal_generators) {
    if (ideal_generators->size() != b_) throw std::invalid_argument("Presentation: one ideal generator per module generator");
    std::vector<Polynomial> g;
    for (const Polynomial& p : *ideal_generators) g.push_back(ring_->reduce(p));
    ideal_generators_ = std::move(g);
  }
}

Presentation Presentation::free(RingPtr ring, std::size_t rank) { return Presentation(std::move(ring), rank, {}); }

Presentation Presentation::with_ideal_generators(std::optional<std::vector<Polynomial>> gens) const {
  return Presentation(ring_, b_, relations_, std::move(gens));
}

Vec Presentation::basis_vector(std::size_t i) const {
  Vec v = zero_vector();
  v.at(i) = ring_->one();
  return v;
}

Vec Presentation::zero_vector() const { return Vec(b_, ring_->zero()); }

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "coker of a " << b_ << " x " << relations_.size() << " matrix over " << ring_->header() << "\n";
  for (std::size_t i = 0; i < b_; ++i) {
    os << "  [";
    for (std::size_t j = 0; j < relations_.size(); ++j) os << (j ? ", " : "") << ring_->format(relations_[j][i]);
    os << "]\n";
  }
  return os.str();
}

namespace {

std::vector<Vec> with_ring_relations(const CoordinateRing& ring, std::size_t rank, std::vector<Vec> gens) {
  for (const Polynomial& r : ring.relation_basis()) {
    for (std::size_t i = 0; i < rank; ++i) {
      Vec v(rank, ring.zero());
      v[i] = r;
      gens.push_back(std::move(v));
    }
  }
  return gens;
}

ModuleOrder pot(const CoordinateRing& ring) { return ModuleOrder{*ring.order(), ModuleOrder::Kind::kPositionOverTerm}; }

// Position-over-term comparison of leading data; true when a is larger.
bool pot_greater(const Vec& a, const Vec& b) {
  auto lead = [](const Vec& v) -> std::size_t {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) return i;
    }
    return v.size();
  };
  std::size_t pa = lead(a), pb = lead(b);
  if (pa != pb) return pa < pb;
  if (pa == a.size()) return false;
  int c = a[pa].order()->compare(a[pa].leading_monomial().exponents(), b[pb].leading_monomial().exponents());
  return c > 0;
}

}  // namespace

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<Vec> generators)
    : ring_(std::move(ring)),
      rank_(rank),
      generators_(std::move(generators)),
      basis_(with_ring_relations(*ring_, rank, generators_), rank, ring_->nvars(), pot(*ring_)) {}

bool Submodule::contains(const Vec& v) const { return basis_.contains(v); }

bool Submodule::contains(const Submodule& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(), [this](const Vec& v) { return contains(v); });
}

Vec Submodule::normal_form(const Vec& v) const { return reduce_vec(*ring_, basis_.normal_form(v)); }

Vec reduce_vec(const CoordinateRing& ring, const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const Polynomial& p : v) out.push_back(ring.reduce(p));
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Vec add_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add_vec: length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec scale_vec(const Polynomial& c, const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const Polynomial& p : v) out.push_back(c * p);
  return out;
}

Vec apply_matrix(const std::vector<Vec>& columns, std::size_t rows, const Vec& c, const CoordinateRing& ring) {
  if (c.size() != columns.size()) throw std::invalid_argument("apply_matrix: coefficient count mismatch");
  Vec out(rows, ring.zero());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (c[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows; ++i) out[i] += c[j] * columns[j][i];
  }
  return reduce_vec(ring, out);
}

Vec normalize_vec(const Vec& v) {
  for (const Polynomial& p : v) {
    if (!p.is_zero()) {
      Rational inv = 1 / p.leading_coeff();
      Vec out;
      for (const Polynomial& q : v) out.push_back(q.scaled(inv));
      return out;
    }
  }
  return v;
}

int vec_degree(const Vec& v) {
  int d = -1;
  for (const Polynomial& p : v) d = std::max(d, p.total_degree());
  return d;
}

std::vector<Vec> minimalize_generators(const RingPtr& ring, std::size_t rank, std::vector<Vec> gens,
                                       const std::vector<Vec>& ambient) {
  std::vector<Vec> live;
  for (const Vec& g : gens) {
    Vec r = normalize_vec(reduce_vec(*ring, g));
    if (is_zero_vec(r)) continue;
    if (std::find(live.begin(), live.end(), r) != live.end()) continue;
    live.push_back(std::move(r));
  }
  if (!ambient.empty() || live.size() > 1) {
    std::stable_sort(live.begin(), live.end(), [](const Vec& a, const Vec& b) { return vec_degree(a) < vec_degree(b); });
    // Highest degree first: drop anything the rest already generates.
    for (std::size_t k = live.size(); k-- > 0;) {
      std::vector<Vec> others = ambient;
      for (std::size_t j = 0; j < live.size(); ++j) {
        if (j != k) others.push_back(live[j]);
      }
      if (Submodule(ring, rank, std::move(others)).contains(live[k])) live.erase(live.begin() + static_cast<long>(k));
    }
  }
  std::sort(live.begin(), live.end(), pot_greater);
  return live;
}

std::vector<Vec> kernel_modulo(const RingPtr& ring, std::size_t b, const std::vector<Vec>& vectors,
                               const std::vector<Vec>& ambient, bool minimal) {
  const std::size_t k = vectors.size();
  if (k == 0) return {};
  const CoordinateRing& R = *ring;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < k; ++i) {
    if (vectors[i].size() != b) throw std::invalid_argument("kernel_modulo: vector length mismatch");
    Vec v(b + k, R.zero());
    for (std::size_t r = 0; r < b; ++r) v[r] = vectors[i][r];
    v[b + i] = R.one();
    gens.push_back(std::move(v));
  }
  for (const Vec& a : ambient) {
    Vec v(b + k, R.zero());
    for (std::size_t r = 0; r < b; ++r) v[r] = a[r];
    gens.push_back(std::move(v));
  }
  for (const Polynomial& rel : R.relation_basis()) {
    for (std::size_t r = 0; r < b; ++r) {
      Vec v(b + k, R.zero());
      v[r] = rel;
      gens.push_back(std::move(v));
    }
  }
  ModuleBasis gb(gens, b + k, R.nvars(), pot(R));
  std::vector<Vec> out;
  for (std::size_t e = 0; e < gb.size(); ++e) {
    if (gb.leading_position(e) < b) continue;
    const Vec& el = gb.elements()[e];
    Vec tag(el.begin() + static_cast<long>(b), el.end());
    tag = reduce_vec(R, tag);
    if (!is_zero_vec(tag)) out.push_back(std::move(tag));
  }
  if (minimal) return minimalize_generators(ring, k, std::move(out));
  return out;
}

std::vector<Vec> module_quotient(const RingPtr& ring, std::size_t b, const std::vector<Vec>& module,
                                 const Polynomial& f) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < b; ++i) {
    Vec v(b, ring->zero());
    v[i] = ring->reduce(f);
    images.push_back(std::move(v));
  }
  return kernel_modulo(ring, b, images, module);
}

ModuleSaturation module_saturate(const RingPtr& ring, std::size_t b, const std::vector<Vec>& module,
                                 const Polynomial& f) {
  if (ring->is_zero(f)) throw std::invalid_argument("module_saturate: saturating element is zero");
  std::vector<Vec> cur = module;
  int k = 0;
  for (;;) {
    std::vector<Vec> next = module_quotient(ring, b, cur, f);
    if (Submodule(ring, b, cur).contains(Submodule(ring, b, next))) {
      return {minimalize_generators(ring, b, cur), k};
    }
    cur = std::move(next);
    ++k;
  }
}

bool same_submodule(const RingPtr& ring, std::size_t b, const std::vector<Vec>& a, const std::vector<Vec>& c) {
  Submodule sa(ring, b, a), sc(ring, b, c);
  return sa.contains(sc) && sc.contains(sa);
}

Presentation syzygies(const RingPtr& ring, std::size_t b, const std::vector<Vec>& vectors) {
  return Presentation(ring, vectors.size(), kernel_modulo(ring, b, vectors, {}));
}

Presentation syzygies(const std::vector<FreeElement>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("syzygies: no vectors");
  return syzygies(vectors.front().ring, vectors.front().coords.size(),
                  [&] {
                    std::vector<Vec> v;
                    for (const FreeElement& e : vectors) v.push_back(e.coords);
                    return v;
                  }());
}

Presentation presentation_of_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<Vec> rows;
  bool any = false;
  for (const Polynomial& g : gens) {
    Polynomial r = ring->reduce(g);
    any = any || !r.is_zero();
    rows.push_back(Vec{r});
  }
  if (!any) throw std::invalid_argument("presentation_of_ideal: all generators are zero");
  Presentation syz = syzygies(ring, 1, rows);
  return Presentation(ring, gens.size(), syz.relations(), gens);
}

Polynomial determinant(const std::vector<Vec>& columns, const CoordinateRing& ring) {
  const std::size_t n = columns.size();
  if (n == 0) return ring.one();
  if (n == 1) return ring.reduce(columns[0][0]);
  if (n == 2) return ring.reduce(columns[0][0] * columns[1][1] - columns[1][0] * columns[0][1]);
  Polynomial det = ring.zero();
  // Expand along the first row.
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial& a = columns[j][0];
    if (a.is_zero()) continue;
    std::vector<Vec> minor;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == j) continue;
      minor.emplace_back(columns[c].begin() + 1, columns[c].end());
    }
    Polynomial term = a * determinant(minor, ring);
    if (j % 2 == 0) det += term; else det -= term;
  }
  return ring.reduce(det);
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> minors(const Presentation& p, std::size_t k) {
  const std::size_t b = p.num_generators(), a = p.num_relations();
  std::vector<Polynomial> out;
  if (k == 0) return {p.ring()->one()};
  if (k > a || k > b) return out;
  std::vector<std::vector<std::size_t>> rows, cols;
  combinations(b, k, rows);
  combinations(a, k, cols);
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      std::vector<Vec> sub;
      for (std::size_t j : c) {
        Vec col;
        for (std::size_t i : r) col.push_back(p.entry(i, j));
        sub.push_back(std::move(col));
      }
      Polynomial d = determinant(sub, *p.ring());
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

int generic_rank(const Presentation& p) {
  const std::size_t b = p.num_generators();
  std::size_t r = 0;
  for (std::size_t k = 1; k <= std::min(b, p.num_relations()); ++k) {
    if (minors(p, k).empty()) break;
    r = k;
  }
  return static_cast<int>(b - r);
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

int min_generators_at(const Presentation& p, const std::vector<Rational>& point) {
  if (!p.ring()->contains_point(point)) throw std::invalid_argument("min_generators_at: point is not on the variety");
  std::vector<std::vector<Rational>> rows(p.num_generators(), std::vector<Rational>(p.num_relations()));
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    for (std::size_t j = 0; j < p.num_relations(); ++j) rows[i][j] = p.entry(i, j).evaluate(point);
  }
  return static_cast<int>(p.num_generators() - rational_rank(std::move(rows)));
}

Ideal fitting_ideal(const Presentation& p, int k) {
  int d = static_cast<int>(p.num_generators()) - k;
  if (d <= 0) return Ideal::unit(p.ring());
  if (d > static_cast<int>(p.num_relations())) return Ideal::zero(p.ring());
  return Ideal(p.ring(), minors(p, static_cast<std::size_t>(d)));
}

std::vector<Vec> kernel_of(const ModuleMap& f) {
  const RingPtr& ring = f.source.ring();
  const std::size_t bs = f.source.num_generators(), bt = f.target.num_generators();
  if (f.images.size() != bs) throw std::invalid_argument("ModuleMap: one image per source generator");
  for (const Vec& v : f.images) {
    if (v.size() != bt) throw std::invalid_argument("ModuleMap: image length differs from target rank");
  }
  // Well-definedness: relations of the source map into im M_target.
  Submodule target_rel(ring, bt, f.target.relations());
  for (const Vec& col : f.source.relations()) {
    if (!target_rel.contains(apply_matrix(f.images, bt, col, *ring))) {
      throw std::invalid_argument("ModuleMap: source relation does not map into the target relations");
    }
  }
  std::vector<Vec> ker = kernel_modulo(ring, bt, f.images, f.target.relations(), false);
  Submodule source_rel(ring, bs, f.source.relations());
  std::vector<Vec> out;
  for (Vec& v : ker) {
    if (!source_rel.contains(v)) out.push_back(std::move(v));
  }
  if (out.empty()) return out;
  return minimalize_generators(ring, bs, std::move(out), f.source.relations());
}

bool is_injective(const ModuleMap& f) { return kernel_of(f).empty(); }

bool is_surjective(const ModuleMap& f) {
  std::vector<Vec> gens = f.images;
  gens.insert(gens.end(), f.target.relations().begin(), f.target.relations().end());
  Submodule image(f.target.ring(), f.target.num_generators(), std::move(gens));
  for (std::size_t i = 0; i < f.target.num_generators(); ++i) {
    if (!image.contains(f.target.basis_vector(i))) return false;
  }
  return true;
}

Presentation tensor_presentation(const Presentation& p, const Presentation& q) {
  if (p.ring()->names() != q.ring()->names()) throw std::invalid_argument("tensor_presentation: different rings");
  const RingPtr& ring = p.ring();
  const std::size_t bp = p.num_generators(), bq = q.num_generators();
  std::vector<Vec> cols;
  for (const Vec& c : p.relations()) {
    for (std::size_t j = 0; j < bq; ++j) {
      Vec v(bp * bq, ring->zero());
      for (std::size_t i = 0; i < bp; ++i) v[i * bq + j] = c[i];
      cols.push_back(std::move(v));
    }
  }
  for (const Vec& d : q.relations()) {
    for (std::size_t i = 0; i < bp; ++i) {
      Vec v(bp * bq, ring->zero());
      for (std::size_t j = 0; j < bq; ++j) v[i * bq + j] = d[j];
      cols.push_back(std::move(v));
    }
  }
  std::optional<std::vector<Polynomial>> gens;
  if (p.ideal_generators() && q.ideal_generators()) {
    gens.emplace();
    for (const Polynomial& g : *p.ideal_generators()) {
      for (const Polynomial& h : *q.ideal_generators()) gens->push_back(ring->mul(g, h));
    }
  }
  return Presentation(ring, bp * bq, std::move(cols), std::move(gens));
}

}  // namespace sheafforge
