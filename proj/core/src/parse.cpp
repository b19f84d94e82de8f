#include "sheafforge/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sheafforge {

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": expected " + expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Leading whitespace count, so columns survive trimming.
int lead(std::string_view s) {
  int n = 0;
  while (n < static_cast<int>(s.size()) && std::isspace(static_cast<unsigned char>(s[n]))) ++n;
  return n;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> names, OrderPtr order, int line, int col0)
      : s_(text), names_(names), order_(std::move(order)), line_(line), col0_(col0) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ < s_.size()) fail("operator or end of input");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& expected) {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(line_, col0_ + static_cast<int>(pos_) + 1, expected, found);
  }

  Polynomial expr() {
    Polynomial acc(names_.size(), order_);
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = neg ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial u = term();
      if (c == '+') acc += u; else acc -= u;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (ident_start(c) || digit(c) || c == '(') {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      if (!digit(peek())) fail("integer exponent");
      unsigned long e = 0;
      while (pos_ < s_.size() && digit(s_[pos_])) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (e > 100000) fail("exponent below 100000");
        ++pos_;
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    char c = peek();
    if (digit(c)) {
      Rational q(digits());
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !digit(s_[pos_])) fail("integer denominator");
        std::size_t at = pos_;
        Rational d(digits());
        if (is_zero(d)) {
          pos_ = at;
          fail("nonzero denominator");
        }
        q /= d;
      }
      return Polynomial::constant(names_.size(), q, order_);
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), id);
      if (it == names_.end()) {
        pos_ = start;
        std::string known;
        for (const std::string& n : names_) known += (known.empty() ? "" : ", ") + n;
        fail("a ring variable (" + known + ")");
      }
      return Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()), order_);
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("')'");
      ++pos_;
      return p;
    }
    fail("number, variable or '('");
  }

  std::string_view s_;
  std::span<const std::string> names_;
  OrderPtr order_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

struct Piece {
  std::string_view text;
  int column;  // 0-based column of text[0]
};

// Splits at commas outside parentheses.
std::vector<Piece> split_list(std::string_view s, int col0, char sep = ',') {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      std::string_view raw = s.substr(start, i - start);
      int l = lead(raw);
      out.push_back({trim(raw), col0 + static_cast<int>(start) + l});
      start = i + 1;
    }
  }
  return out;
}

std::vector<Polynomial> parse_list(std::string_view s, int col0, int line, const CoordinateRing& ring) {
  std::vector<Polynomial> out;
  if (trim(s).empty()) return out;
  for (const Piece& p : split_list(s, col0)) {
    if (p.text.empty()) throw ParseError(line, p.column + 1, "polynomial", "empty entry");
    out.push_back(ring.reduce(parse_polynomial(p.text, ring.names(), ring.order(), line, p.column)));
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names, OrderPtr order,
                            int line, int column_offset) {
  return PolyParser(text, names, std::move(order), line, column_offset).run();
}

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  std::vector<std::string> none;
  Polynomial p = parse_polynomial(t, none);
  auto c = p.constant_value();
  if (!c) throw ParseError(1, 1, "rational number", std::string(t));
  return *c;
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> out;
  std::vector<std::string> none;
  for (const Piece& p : split_list(text, 0)) {
    Polynomial c = parse_polynomial(p.text, none, default_order(), 1, p.column);
    out.push_back(*c.constant_value());
  }
  return out;
}

RingPtr parse_ring_header(std::string_view line, int line_no) {
  int l = lead(line);
  std::string_view body = trim(line);
  if (!starts_with(body, "ring")) throw ParseError(line_no, l + 1, "'ring'", std::string(body.substr(0, 8)));
  auto segments = split_list(body.substr(4), l + 4, '|');
  std::vector<std::string> names;
  for (const Piece& p : split_list(segments[0].text, segments[0].column)) {
    if (p.text.empty()) break;
    bool ok = ident_start(p.text.front()) && std::all_of(p.text.begin(), p.text.end(), ident_char);
    if (!ok) throw ParseError(line_no, p.column + 1, "variable name", "'" + std::string(p.text) + "'");
    names.emplace_back(p.text);
  }
  MonomialOrder order = MonomialOrder::degrevlex();
  std::string_view relations;
  int rel_col = 0;
  for (std::size_t i = 1; i < segments.size(); ++i) {
    const Piece& seg = segments[i];
    if (starts_with(seg.text, "relations:")) {
      relations = seg.text.substr(10);
      rel_col = seg.column + 10;
    } else if (starts_with(seg.text, "order:")) {
      std::string name(trim(seg.text.substr(6)));
      try {
        order = parse_order(name);
      } catch (const std::exception&) {
        throw ParseError(line_no, seg.column + 7, "lex, degrevlex or block(k)", "'" + name + "'");
      }
    } else {
      throw ParseError(line_no, seg.column + 1, "'relations:' or 'order:'", "'" + std::string(seg.text) + "'");
    }
  }
  RingPtr bare = CoordinateRing::make(names, std::vector<Polynomial>{}, order);
  std::vector<Polynomial> rels = parse_list(relations, rel_col, line_no, *bare);
  return CoordinateRing::make(std::move(names), std::move(rels), std::move(order));
}

ParsedInput parse_input(std::string_view text) {
  ParsedInput out;
  std::vector<std::pair<std::string_view, int>> lines;
  {
    std::size_t start = 0;
    int no = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view ln = text.substr(start, end - start);
      if (auto hash = ln.find('#'); hash != std::string_view::npos) ln = ln.substr(0, hash);
      if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);
      if (!trim(ln).empty()) lines.emplace_back(ln, no);
      start = end + 1;
      ++no;
    }
  }
  if (lines.empty()) throw ParseError(1, 1, "'ring' header", "end of input");
  out.ring = parse_ring_header(lines[0].first, lines[0].second);
  const CoordinateRing& ring = *out.ring;

  std::optional<std::size_t> count;
  bool have_generators = false;
  bool have_matrix = false;
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto [ln, no] = lines[k];
    int l = lead(ln);
    std::string_view body = trim(ln);
    if (starts_with(body, "ideal:")) {
      out.ideal = parse_list(body.substr(6), l + 6, no, ring);
      have_matrix = false;
    } else if (starts_with(body, "generators:")) {
      have_generators = true;
      have_matrix = false;
      std::string_view rest = trim(body.substr(11));
      if (!rest.empty() && std::all_of(rest.begin(), rest.end(), digit)) {
        count = std::stoul(std::string(rest));
      } else {
        out.ideal = parse_list(body.substr(11), l + 11, no, ring);
      }
    } else if (starts_with(body, "relations-matrix:")) {
      have_matrix = true;
      if (!trim(body.substr(17)).empty()) {
        rows.push_back(parse_list(body.substr(17), l + 17, no, ring));
      }
    } else if (have_matrix) {
      rows.push_back(parse_list(ln, 0, no, ring));
    } else {
      throw ParseError(no, l + 1, "'ideal:', 'generators:' or 'relations-matrix:'",
                       "'" + std::string(body.substr(0, 20)) + "'");
    }
  }

  if (have_generators) {
    std::size_t b = count ? *count : out.ideal.size();
    if (!rows.empty() && rows.size() != b) {
      throw ParseError(lines.back().second, 1, std::to_string(b) + " matrix rows",
                       std::to_string(rows.size()) + " rows");
    }
    std::size_t a = rows.empty() ? 0 : rows[0].size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != a) {
        throw ParseError(lines.back().second, 1, std::to_string(a) + " entries per row",
                         std::to_string(rows[i].size()) + " in row " + std::to_string(i + 1));
      }
    }
    if (!count && rows.empty() && !out.ideal.empty()) {
      out.presentation = presentation_of_ideal(out.ring, out.ideal);
    } else {
      std::vector<Vec> columns(a, Vec(b, ring.zero()));
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < a; ++j) columns[j][i] = rows[i][j];
      }
      std::optional<std::vector<Polynomial>> gens;
      if (!count) gens = out.ideal;
      out.presentation = Presentation(out.ring, b, std::move(columns), std::move(gens));
    }
  }
  return out;
}

Ideal input_ideal(const ParsedInput& in) {
  if (!in.ideal.empty() || !in.presentation) return Ideal(in.ring, in.ideal);
  if (in.presentation->ideal_generators()) return Ideal(in.ring, *in.presentation->ideal_generators());
  throw std::invalid_argument("input: no ideal given");
}

Presentation input_presentation(const ParsedInput& in) {
  if (in.presentation) return *in.presentation;
  return presentation_of_ideal(in.ring, in.ideal);
}

std::string format_presentation_file(const Presentation& p) {
  const CoordinateRing& ring = *p.ring();
  std::ostringstream os;
  os << ring.header() << "\n";
  if (p.ideal_generators()) {
    os << "generators: ";
    const auto& g = *p.ideal_generators();
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << ring.format(g[i]);
    os << "\n";
  } else {
    os << "generators: " << p.num_generators() << "\n";
  }
  os << "relations-matrix:\n";
  if (p.num_relations() > 0) {
    for (std::size_t i = 0; i < p.num_generators(); ++i) {
      os << "  ";
      for (std::size_t j = 0; j < p.num_relations(); ++j) os << (j ? ", " : "") << ring.format(p.entry(i, j));
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace sheafforge
