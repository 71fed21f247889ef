#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symk2/error.hpp"
#include "symk2/factor.hpp"
#include "symk2/poly.hpp"

namespace symk2 {
inline namespace symplectic {

// Rational function in x, y, stored reduced: gcd(num, den) = 1 and the
// denominator is primitive with canonical sign (its rational unit migrates
// into the numerator).
class RationalFunction {
 public:
  RationalFunction() : num_(affine_poly()), den_(affine_const(1)) {}

  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != affine_vars() || den_.vars() != affine_vars())
      throw value_error("rational functions live in x, y");
    if (den_.is_zero()) throw value_error("zero denominator");
    reduce();
  }

  static RationalFunction from_poly(Poly p) {
    return RationalFunction(std::move(p), affine_const(1));
  }
  static RationalFunction constant(const Rat& c) {
    return from_poly(affine_const(c));
  }
  static RationalFunction x() { return from_poly(affine_x()); }
  static RationalFunction y() { return from_poly(affine_y()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const {
    if (!is_constant()) throw value_error("rational function is not constant");
    return num_.constant_value() / den_.constant_value();
  }
  bool is_one() const { return num_ == den_; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw value_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw value_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  // Formal partial derivative (quotient rule).
  RationalFunction derivative(std::size_t var) const {
    return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                            den_ * den_);
  }

  // Substitute x -> images[0], y -> images[1] (composition with a map).
  RationalFunction substitute(const RationalFunction& ix, const RationalFunction& iy) const {
    RationalFunction n = substitute_poly(num_, ix, iy);
    RationalFunction d = substitute_poly(den_, ix, iy);
    return n / d;
  }

  // Exact evaluation; nothing when the denominator vanishes at the point.
  std::optional<Rat> evaluate(const Rat& ax, const Rat& ay) const {
    Rat d = den_.evaluate({ax, ay});
    if (d == 0) return std::nullopt;
    return num_.evaluate({ax, ay}) / d;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    // parenthesize unless the denominator is a lone power (re-parse safety)
    if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  static RationalFunction substitute_poly(const Poly& p, const RationalFunction& ix,
                                          const RationalFunction& iy) {
    // common denominator: p(ix, iy) = sum c * nx^i ny^j * dx^(dx_max-i) * dy^(dy_max-j)
    // over (dx^dx_max * dy^dy_max)
    RationalFunction acc = constant(0);
    RationalFunction vx = ix, vy = iy;
    for (const auto& [e, c] : p.terms()) {
      RationalFunction term = constant(c);
      for (int k = 0; k < e[0]; ++k) term = term * vx;
      for (int k = 0; k < e[1]; ++k) term = term * vy;
      acc = acc + term;
    }
    return acc;
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = affine_const(1);
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    auto [du, dcanon] = den_.normalized();
    den_ = dcanon;
    num_ *= Rat(1) / du;
  }

  Poly num_, den_;
};

}  // namespace symplectic
}  // namespace symk2
