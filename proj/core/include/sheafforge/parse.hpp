#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sheafforge/module.hpp"
#include "sheafforge/order.hpp"
#include "sheafforge/polynomial.hpp"
#include "sheafforge/ring.hpp"

namespace sheafforge {

/// Parse failure with a 1-based position and the tokens that would have
/// been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

/// Grammar: sums of terms; a term is a product of factors (`*` optional);
/// a factor is an integer, `p/q`, a variable `[a-zA-Z][a-zA-Z0-9_]*` or a
/// parenthesised expression, optionally raised to `^n`.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names,
                            OrderPtr order = default_order(), int line = 1, int column_offset = 0);

Rational parse_rational(std::string_view text);
/// Comma separated rationals, e.g. `0,0` or `1/2, 3`.
std::vector<Rational> parse_point(std::string_view text);

/// `ring x, y | relations: x^3 - y^2 | order: degrevlex`
RingPtr parse_ring_header(std::string_view line, int line_no = 1);

/// Contents of an input file: a ring header followed by either `ideal:` or
/// `generators:` (plus optional `relations-matrix:` rows).
struct ParsedInput {
  RingPtr ring;
  std::vector<Polynomial> ideal;             // `ideal:` or polynomial `generators:`
  std::optional<Presentation> presentation;  // when `generators:` was given
};
ParsedInput parse_input(std::string_view text);
/// `ideal:` generators, or a presentation's ideal generators.
Ideal input_ideal(const ParsedInput& in);
/// The presentation, or the presentation of the `ideal:` generators.
Presentation input_presentation(const ParsedInput& in);

/// Text form of a presentation accepted by `parse_input`.
std::string format_presentation_file(const Presentation& p);

}  // namespace sheafforge
