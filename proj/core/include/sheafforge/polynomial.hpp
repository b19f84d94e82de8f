#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sheafforge/monomial.hpp"
#include "sheafforge/order.hpp"
#include "sheafforge/rational.hpp"

namespace sheafforge {

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial over the rationals. Terms are stored
/// strictly decreasing under the polynomial's monomial order, with no zero
/// coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars, OrderPtr order = default_order());

  static Polynomial constant(std::size_t nvars, const Rational& c, OrderPtr order = default_order());
  static Polynomial variable(std::size_t nvars, std::size_t index, OrderPtr order = default_order());
  static Polynomial monomial(const Monomial& m, const Rational& c, OrderPtr order = default_order());
  /// Terms may be in any order and contain duplicates or zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               OrderPtr order = default_order());

  std::size_t nvars() const { return nvars_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value if the polynomial is constant (zero included).
  std::optional<Rational> constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  int total_degree() const;  // -1 for zero
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Weighted degrees (min, max) over terms; requires nonzero.
  std::pair<int, int> weighted_degree_range(std::span<const int> weights) const;
  bool involves(std::size_t var) const;

  Polynomial with_order(OrderPtr order) const;
  Polynomial monic() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Re-index variables: variable i moves to `index_map[i]` in a ring with
  /// `new_nvars` variables.
  Polynomial remap(std::size_t new_nvars, std::span<const std::size_t> index_map,
                   OrderPtr order) const;

  /// Exact quotient if `divisor` divides this polynomial, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Equality as polynomials, independent of the stored order.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const Polynomial& other) const;
  void sort_terms();

  std::size_t nvars_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

/// Generic variable names x1..xn for printing polynomials without a ring.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace sheafforge
