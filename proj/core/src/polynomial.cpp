#include "sheafforge/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sheafforge {

namespace {

bool same_order(const OrderPtr& a, const OrderPtr& b) { return a == b || *a == *b; }

}  // namespace

Polynomial::Polynomial(std::size_t nvars, OrderPtr order) : nvars_(nvars), order_(std::move(order)) {
  if (!order_) order_ = default_order();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, OrderPtr order) {
  Polynomial p(nvars, std::move(order));
  if (!sheafforge::is_zero(c)) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, OrderPtr order) {
  if (index >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
  Monomial m(nvars);
  m[index] = 1;
  return monomial(m, 1, std::move(order));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, OrderPtr order) {
  Polynomial p(m.size(), std::move(order));
  if (!sheafforge::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms, OrderPtr order) {
  Polynomial p(nvars, std::move(order));
  for (const Term& t : terms) {
    if (t.monomial.size() != nvars) throw std::invalid_argument("Polynomial: variable-count mismatch");
  }
  p.terms_ = std::move(terms);
  p.sort_terms();
  return p;
}

void Polynomial::sort_terms() {
  const MonomialOrder& ord = *order_;
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && sheafforge::is_zero(merged.back().coeff)) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sheafforge::is_zero(merged.back().coeff)) merged.pop_back();
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().monomial.is_one()) return terms_.front().coeff;
  return std::nullopt;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

std::pair<int, int> Polynomial::weighted_degree_range(std::span<const int> weights) const {
  if (terms_.empty()) throw std::invalid_argument("weighted_degree_range: zero polynomial");
  int lo = 0, hi = 0;
  bool first = true;
  for (const Term& t : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < nvars_ && i < weights.size(); ++i) w += weights[i] * t.monomial[i];
    if (first) {
      lo = hi = w;
      first = false;
    } else {
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
  }
  return {lo, hi};
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] > 0; });
}

Polynomial Polynomial::with_order(OrderPtr order) const {
  if (same_order(order, order_)) {
    Polynomial p = *this;
    p.order_ = std::move(order);
    return p;
  }
  Polynomial p(nvars_, std::move(order));
  p.terms_ = terms_;
  p.sort_terms();
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / leading_coeff());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sheafforge::is_zero(c)) return Polynomial(nvars_, order_);
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (sheafforge::is_zero(c)) return Polynomial(nvars_, order_);
  Polynomial p(nvars_, order_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1, order_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial p(nvars_, order_);
  for (const Term& t : terms_) {
    if (t.monomial[var] == 0) continue;
    Monomial m = t.monomial;
    m[var] -= 1;
    p.terms_.push_back({m, t.coeff * t.monomial[var]});
  }
  return p;  // order preserved: dividing by a variable is order-compatible among survivors
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::remap(std::size_t new_nvars, std::span<const std::size_t> index_map,
                             OrderPtr order) const {
  if (index_map.size() != nvars_) throw std::invalid_argument("remap: index map size mismatch");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] >= new_nvars) throw std::invalid_argument("remap: variable dropped but used");
      m[index_map[i]] += t.monomial[i];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return from_terms(new_nvars, std::move(terms), std::move(order));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  Polynomial d = divisor.with_order(order_);
  Polynomial rest = *this;
  Polynomial q(nvars_, order_);
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!d.leading_monomial().divides(lt.monomial)) return std::nullopt;
    Monomial m = lt.monomial.quotient(d.leading_monomial());
    Rational c = lt.coeff / d.leading_coeff();
    q += Polynomial::monomial(m, c, order_);
    rest -= d.mul_term(m, c);
  }
  return q;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("Polynomial: variable-count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  const Polynomial* rhs = &other;
  Polynomial reordered(0);
  if (!same_order(order_, other.order_)) {
    reordered = other.with_order(order_);
    rhs = &reordered;
  }
  const MonomialOrder& ord = *order_;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs->terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = rhs->terms_.begin(), be = rhs->terms_.end();
  while (a != ae && b != be) {
    int c = ord.compare(a->monomial, b->monomial);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (!sheafforge::is_zero(s)) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) out.push_back(std::move(*a));
  for (; b != be; ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_, a.order_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) out.terms_.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  out.sort_terms();
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  if (!same_order(a.order_, b.order_)) return a == b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> fallback;
  if (names.size() < nvars_) {
    fallback = default_names(nvars_);
    names = fallback;
  }
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool one = t.monomial.is_one();
    if (one) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += format_monomial(t.monomial, names);
    }
  }
  return out;
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace sheafforge
