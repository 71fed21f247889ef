#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symk2/error.hpp"
#include "symk2/map.hpp"
#include "symk2/poly.hpp"
#include "symk2/ratfunc.hpp"

namespace symk2 {
inline namespace cli {

namespace detail {

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' nonneg_int)?
//   base   := integer | variable | '(' expr ')' | '-' base
// No implicit multiplication. Values are carried as unreduced fractions of
// polynomials so that the same parser serves affine and projective inputs.
class ExprParser {
 public:
  ExprParser(std::string_view text, std::vector<std::string> vars)
      : text_(text), vars_(std::move(vars)) {}

  struct Frac {
    Poly num, den;
  };

  Frac parse_full() {
    Frac v = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return v;
  }

  // map syntax: '(' expr ',' expr ')'
  std::pair<Frac, Frac> parse_pair() {
    skip_ws();
    expect('(');
    Frac f = parse_expr();
    skip_ws();
    expect(',');
    Frac g = parse_expr();
    skip_ws();
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return {std::move(f), std::move(g)};
  }

 private:
  Poly konst(const Rat& c) const { return Poly::constant(vars_, c); }

  Frac parse_expr() {
    Frac v = parse_term();
    while (true) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        char op = take();
        Frac w = parse_term();
        Poly cross = op == '+' ? v.num * w.den + w.num * v.den : v.num * w.den - w.num * v.den;
        v = Frac{std::move(cross), v.den * w.den};
      } else {
        return v;
      }
    }
  }

  Frac parse_term() {
    Frac v = parse_factor();
    while (true) {
      skip_ws();
      if (peek() == '*' || peek() == '/') {
        std::size_t at = pos_;
        char op = take();
        Frac w = parse_factor();
        if (op == '*') {
          v = Frac{v.num * w.num, v.den * w.den};
        } else {
          if (w.num.is_zero()) throw parse_error("division by the zero polynomial", at);
          v = Frac{v.num * w.den, v.den * w.num};
        }
      } else {
        return v;
      }
    }
  }

  Frac parse_factor() {
    Frac v = parse_base();
    skip_ws();
    if (peek() != '^') return v;
    std::size_t at = pos_;
    take();
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("exponent must be a nonnegative integer", pos_);
    Int e = read_integer();
    if (e > 512) throw parse_error("exponent too large", at);
    int n = static_cast<int>(e);
    Frac out{konst(Rat(1)), konst(Rat(1))};
    for (int i = 0; i < n; ++i) out = Frac{out.num * v.num, out.den * v.den};
    return out;
  }

  Frac parse_base() {
    skip_ws();
    char c = peek();
    if (c == '\0') throw parse_error("unexpected end of input", pos_);
    if (c == '(') {
      take();
      Frac v = parse_expr();
      skip_ws();
      expect(')');
      return v;
    }
    if (c == '-') {
      take();
      Frac v = parse_base();
      return Frac{-v.num, std::move(v.den)};
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Frac{konst(Rat(read_integer())), konst(Rat(1))};
    if (std::isalpha(static_cast<unsigned char>(c))) {
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].size() == 1 && vars_[i][0] == c) {
          take();
          return Frac{Poly::variable(vars_, i), konst(Rat(1))};
        }
      throw parse_error(std::string("unknown variable '") + c + "'", pos_);
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  Int read_integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    return Int(digits);
  }

  void expect(char c) {
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    take();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

inline RationalFunction frac_to_rf(ExprParser::Frac f) {
  if (f.den.is_zero()) throw value_error("division by the zero polynomial");
  return RationalFunction(std::move(f.num), std::move(f.den));
}

}  // namespace detail

// "x^2 - 1/y" and friends, over the affine variables.
inline RationalFunction parse_rational_function(std::string_view text) {
  detail::ExprParser p(text, affine_vars());
  return detail::frac_to_rf(p.parse_full());
}

// "(f, g)" with both coordinates over the affine variables.
inline RationalMap parse_rational_map(std::string_view text) {
  detail::ExprParser p(text, affine_vars());
  auto [f, g] = p.parse_pair();
  return RationalMap(detail::frac_to_rf(std::move(f)), detail::frac_to_rf(std::move(g)));
}

// A polynomial in X, Y, Z; division is only allowed by constants.
inline Poly parse_projective_poly(std::string_view text) {
  detail::ExprParser p(text, projective_vars());
  auto f = p.parse_full();
  if (f.den.is_zero()) throw value_error("division by the zero polynomial");
  if (!f.den.is_constant())
    throw value_error("projective input must be polynomial (nonconstant denominator)");
  return f.num * Poly::constant(projective_vars(), Rat(1) / f.den.constant_value());
}

}  // namespace cli
}  // namespace symk2
