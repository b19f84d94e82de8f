#include "sheafforge/order.hpp"

#include <stdexcept>

namespace sheafforge {

namespace {

int lex_compare(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int degrevlex_compare(std::span<const int> a, std::span<const int> b) {
  long da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::kLex;
  return o;
}

MonomialOrder MonomialOrder::degrevlex() {
  MonomialOrder o;
  o.kind_ = Kind::kDegRevLex;
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t split, MonomialOrder first, MonomialOrder second) {
  MonomialOrder o;
  o.kind_ = Kind::kBlock;
  o.split_ = split;
  o.first_ = std::make_shared<const MonomialOrder>(std::move(first));
  o.second_ = std::make_shared<const MonomialOrder>(std::move(second));
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<int> weights, MonomialOrder tiebreak) {
  for (int w : weights) {
    if (w < 0) throw std::invalid_argument("weighted order: negative weight");
  }
  MonomialOrder o;
  o.kind_ = Kind::kWeighted;
  o.weights_ = std::move(weights);
  o.first_ = std::make_shared<const MonomialOrder>(std::move(tiebreak));
  return o;
}

int MonomialOrder::compare(std::span<const int> a, std::span<const int> b) const {
  switch (kind_) {
    case Kind::kLex:
      return lex_compare(a, b);
    case Kind::kDegRevLex:
      return degrevlex_compare(a, b);
    case Kind::kBlock: {
      std::size_t s = std::min(split_, a.size());
      if (int c = first_->compare(a.first(s), b.first(s)); c != 0) return c;
      return second_->compare(a.subspan(s), b.subspan(s));
    }
    case Kind::kWeighted: {
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size() && i < weights_.size(); ++i) {
        wa += static_cast<long>(weights_[i]) * a[i];
        wb += static_cast<long>(weights_[i]) * b[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      return first_->compare(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::kLex:
      return "lex";
    case Kind::kDegRevLex:
      return "degrevlex";
    case Kind::kBlock:
      return "block(" + std::to_string(split_) + ", " + first_->name() + ", " + second_->name() + ")";
    case Kind::kWeighted: {
      std::string w;
      for (std::size_t i = 0; i < weights_.size(); ++i) w += (i ? "," : "") + std::to_string(weights_[i]);
      return "weighted([" + w + "], " + first_->name() + ")";
    }
  }
  return "?";
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case MonomialOrder::Kind::kLex:
    case MonomialOrder::Kind::kDegRevLex:
      return true;
    case MonomialOrder::Kind::kBlock:
      return a.split_ == b.split_ && *a.first_ == *b.first_ && *a.second_ == *b.second_;
    case MonomialOrder::Kind::kWeighted:
      return a.weights_ == b.weights_ && *a.first_ == *b.first_;
  }
  return false;
}

OrderPtr make_order(MonomialOrder order) {
  return std::make_shared<const MonomialOrder>(std::move(order));
}

const OrderPtr& default_order() {
  static const OrderPtr order = make_order(MonomialOrder::degrevlex());
  return order;
}

MonomialOrder parse_order(const std::string& text) {
  if (text == "lex") return MonomialOrder::lex();
  if (text == "degrevlex" || text == "grevlex") return MonomialOrder::degrevlex();
  if (text.rfind("block(", 0) == 0 && text.back() == ')') {
    std::size_t split = std::stoul(text.substr(6, text.size() - 7));
    return MonomialOrder::block(split, MonomialOrder::degrevlex(), MonomialOrder::degrevlex());
  }
  throw std::invalid_argument("unknown monomial order '" + text + "'");
}

}  // namespace sheafforge
