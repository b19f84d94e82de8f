#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sheafforge/monomial.hpp"

namespace sheafforge {

/// Term order on exponent vectors. All kinds are multiplicative well-orders
/// (weighted orders require non-negative weights).
class MonomialOrder {
 public:
  enum class Kind { kLex, kDegRevLex, kBlock, kWeighted };

  static MonomialOrder lex();
  static MonomialOrder degrevlex();
  /// Variables [0, split) compared with `first`; ties broken on [split, n) with `second`.
  static MonomialOrder block(std::size_t split, MonomialOrder first, MonomialOrder second);
  /// Weighted degree first (missing weights count as 0), then `tiebreak`.
  static MonomialOrder weighted(std::vector<int> weights, MonomialOrder tiebreak);

  /// Negative, zero or positive as a <, ==, > b.
  int compare(std::span<const int> a, std::span<const int> b) const;
  int compare(const Monomial& a, const Monomial& b) const {
    return compare(a.exponents(), b.exponents());
  }

  Kind kind() const { return kind_; }
  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  MonomialOrder() = default;

  Kind kind_ = Kind::kDegRevLex;
  std::size_t split_ = 0;
  std::vector<int> weights_;
  std::shared_ptr<const MonomialOrder> first_;
  std::shared_ptr<const MonomialOrder> second_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

OrderPtr make_order(MonomialOrder order);
/// Shared degrevlex instance used when no order is specified.
const OrderPtr& default_order();

/// Parses `lex`, `degrevlex`, `block(k)` (degrevlex on both blocks).
MonomialOrder parse_order(const std::string& text);

}  // namespace sheafforge
