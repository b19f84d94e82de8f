#include <algorithm>

#include "sheafforge/module.hpp"

namespace sheafforge {

namespace {

bool homogeneous_matrix(const std::vector<Vec>& cols) {
  for (const Vec& c : cols) {
    for (const Polynomial& e : c) {
      if (!e.is_homogeneous()) return false;
    }
  }
  return true;
}

}  // namespace

Presentation prune(const Presentation& p) {
  const RingPtr& ring = p.ring();
  std::size_t b = p.num_generators();
  std::vector<Vec> cols = p.relations();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < cols.size() && !changed; ++j) {
      for (std::size_t i = 0; i < b && !changed; ++i) {
        auto c = cols[j][i].constant_value();
        if (!c || sgn(*c) == 0) continue;
        // Generator i equals a combination of the others: eliminate it.
        Vec pivot = cols[j];
        std::vector<Vec> next;
        for (std::size_t k = 0; k < cols.size(); ++k) {
          if (k == j) continue;
          Vec v = cols[k];
          if (!v[i].is_zero()) {
            Polynomial m = v[i].scaled(1 / *c);
            for (std::size_t r = 0; r < b; ++r) v[r] = ring->reduce(v[r] - m * pivot[r]);
          }
          v.erase(v.begin() + static_cast<long>(i));
          next.push_back(std::move(v));
        }
        cols = std::move(next);
        --b;
        changed = true;
      }
    }
  }
  cols = minimalize_generators(ring, b, std::move(cols));
  return Presentation(ring, b, std::move(cols));
}

FreeResolution free_resolution(const Presentation& p, std::size_t length_bound) {
  Presentation pp = prune(p);
  FreeResolution res;
  res.ranks.push_back(pp.num_generators());
  res.graded = homogeneous_matrix(pp.relations());
  if (pp.num_relations() == 0) {
    res.complete = true;
    return res;
  }
  std::vector<Vec> cur = pp.relations();
  std::size_t rows = pp.num_generators();
  res.maps.push_back(cur);
  res.ranks.push_back(cur.size());
  while (res.maps.size() < length_bound) {
    std::vector<Vec> ker = kernel_modulo(pp.ring(), rows, cur, {});
    if (ker.empty()) {
      res.complete = true;
      return res;
    }
    rows = cur.size();
    cur = std::move(ker);
    res.maps.push_back(cur);
    res.ranks.push_back(cur.size());
  }
  res.complete = kernel_modulo(pp.ring(), rows, cur, {}).empty();
  return res;
}

std::optional<bool> hom_dim_le_1_at_origin(const Presentation& p, std::size_t length_bound) {
  // Only the first syzygy matters here.
  FreeResolution res = free_resolution(p, std::min<std::size_t>(length_bound, 1));
  if (res.length() <= 1 && res.complete) return true;
  if (!res.graded) return std::nullopt;
  return false;
}

}  // namespace sheafforge
