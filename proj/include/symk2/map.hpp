#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "symk2/error.hpp"
#include "symk2/poly.hpp"
#include "symk2/ratfunc.hpp"
#include "symk2/rational.hpp"

namespace symk2 {
inline namespace symplectic {

// Dominant rational self-map of the plane, (x, y) -> (f(x,y), g(x,y)).
class RationalMap {
 public:
  RationalMap(RationalFunction f, RationalFunction g) : f_(std::move(f)), g_(std::move(g)) {
    if (jacobian().is_zero()) throw value_error("map is not dominant: zero Jacobian");
  }

  static RationalMap identity() {
    return RationalMap(RationalFunction::x(), RationalFunction::y());
  }

  const RationalFunction& f() const { return f_; }
  const RationalFunction& g() const { return g_; }

  // Jacobian determinant f_x g_y - f_y g_x as a rational function.
  RationalFunction jacobian() const {
    return f_.derivative(0) * g_.derivative(1) - f_.derivative(1) * g_.derivative(0);
  }

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.f_ == b.f_ && a.g_ == b.g_;
  }

  // Largest total degree among the four defining polynomials.
  int degree() const {
    int d = f_.num().total_degree();
    d = std::max(d, f_.den().total_degree());
    d = std::max(d, g_.num().total_degree());
    return std::max(d, g_.den().total_degree());
  }

  std::string str() const { return "(" + f_.str() + ", " + g_.str() + ")"; }

 private:
  RationalFunction f_, g_;
};

// The function comparing the pullback of dx/x ^ dy/y with the form itself:
// x y Jac(f, g) / (f g). The map preserves the form exactly when this is 1.
inline RationalFunction log_jacobian_ratio(const RationalMap& m) {
  return RationalFunction::x() * RationalFunction::y() * m.jacobian() / (m.f() * m.g());
}

enum class FormKind { Preserves, ScalesBy, NonProportional };

// Classification of the pullback ratio: exactly the form, a constant multiple
// of it, or neither.
struct FormVerdict {
  FormKind kind = FormKind::NonProportional;
  RationalFunction ratio;
  Rat scale;  // the constant for Preserves (1) and ScalesBy; 0 otherwise

  bool preserves() const { return kind == FormKind::Preserves; }
};

inline FormVerdict is_symplectic_form(const RationalMap& m) {
  RationalFunction r = log_jacobian_ratio(m);
  if (r.is_one()) return {FormKind::Preserves, r, Rat(1)};
  if (r.is_constant()) return {FormKind::ScalesBy, r, r.constant_value()};
  return {FormKind::NonProportional, r, Rat(0)};
}

// compose(phi, psi) applies phi first: the result is psi after phi, with both
// coordinates reduced to coprime form.
inline RationalMap compose(const RationalMap& phi, const RationalMap& psi) {
  try {
    return RationalMap(psi.f().substitute(phi.f(), phi.g()),
                       psi.g().substitute(phi.f(), phi.g()));
  } catch (const value_error&) {
    throw value_error("degenerate composition");
  }
}

// ---- generators of form-preserving maps ----------------------------------------

namespace detail {

// x^a y^b as a reduced rational function.
inline RationalFunction monomial_rf(int a, int b) {
  Poly num = affine_const(1), den = affine_const(1);
  Poly px = affine_x(), py = affine_y();
  for (int i = 0; i < (a > 0 ? a : -a); ++i) (a > 0 ? num : den) *= px;
  for (int i = 0; i < (b > 0 ? b : -b); ++i) (b > 0 ? num : den) *= py;
  return RationalFunction(num, den);
}

}  // namespace detail

// (x^{m00} y^{m01}, x^{m10} y^{m11}); requires det(m) != 0.
inline RationalMap gen_monomial(const std::array<std::array<int, 2>, 2>& m) {
  if (m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0)
    throw value_error("monomial map needs an invertible exponent matrix");
  return RationalMap(detail::monomial_rf(m[0][0], m[0][1]),
                     detail::monomial_rf(m[1][0], m[1][1]));
}

// (a x, b y) with a, b != 0.
inline RationalMap gen_torus(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw value_error("torus map needs nonzero scalars");
  return RationalMap(RationalFunction::x() * RationalFunction::constant(a),
                     RationalFunction::y() * RationalFunction::constant(b));
}

enum class Axis { Horizontal, Vertical };

// Vertical: (x, y p(x)) with p a nonzero function of x alone; horizontal:
// (x p(y), y) with p in y alone. Both have pullback ratio 1.
inline RationalMap gen_elementary(const RationalFunction& p, Axis axis) {
  if (p.is_zero()) throw value_error("elementary map needs a nonzero multiplier");
  std::size_t forbidden = axis == Axis::Vertical ? 1 : 0;
  if (p.num().degree_in(forbidden) > 0 || p.den().degree_in(forbidden) > 0)
    throw value_error("elementary multiplier must depend on the fixed coordinate only");
  if (axis == Axis::Vertical)
    return RationalMap(RationalFunction::x(), RationalFunction::y() * p);
  return RationalMap(RationalFunction::x() * p, RationalFunction::y());
}

}  // namespace symplectic
}  // namespace symk2
