#ifndef PLAS_POLY_TEXT_HPP
#define PLAS_POLY_TEXT_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "plas/errors.hpp"
#include "plas/multipoly.hpp"

namespace plas {

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | symbol ('^' uint)? | '(' expr ')' | '-' factor
//   rational := int ('/' uint)?
// Whitespace is allowed between tokens.

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const SymbolContext& ctx) : text_(text), ctx_(ctx) {}

  MultiPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    MultiPoly p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      MultiPoly rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc *= factor();
    }
  }

  MultiPoly factor() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly rational() {
    std::string num = digits();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected denominator", pos_);
      std::string den = digits();
      if (mpz_class(den) == 0) throw ParseError("zero denominator", at);
      return MultiPoly(ctx_, Rational(mpz_class(num), mpz_class(den)));
    }
    return MultiPoly(ctx_, Rational(mpz_class(num), mpz_class(1)));
  }

  MultiPoly symbol() {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (!ctx_.contains(name)) throw ParseError("undeclared symbol '" + name + "'", start);
    std::uint32_t power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
      std::string e = digits();
      if (e.size() > 6) throw ParseError("exponent too large", at);
      power = static_cast<std::uint32_t>(std::stoul(e));
    }
    return MultiPoly::variable(ctx_, name, power);
  }

  std::string_view text_;
  const SymbolContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(std::string_view text, const SymbolContext& ctx) {
  return detail::PolyParser(text, ctx).parse();
}

inline std::string format_monomial(const Monomial& m, const SymbolContext& ctx) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (!m[v]) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

/// Canonical text: terms in descending graded-lex order, e.g. "x1*x2 - 1/2*y1^2 + 3".
inline std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c.sign() < 0;
    Rational mag = abs(c);
    std::string mono = format_monomial(m, p.context());
    std::string body;
    if (mono.empty())
      body = mag.to_string();
    else if (mag == Rational(1))
      body = mono;
    else
      body = mag.to_string() + "*" + mono;
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << format_poly(p); }

}  // namespace plas

#endif  // PLAS_POLY_TEXT_HPP
