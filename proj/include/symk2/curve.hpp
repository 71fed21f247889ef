#pragma once

#include <compare>
#include <string>
#include <utility>

#include "symk2/error.hpp"
#include "symk2/factor.hpp"
#include "symk2/poly.hpp"

namespace symk2 {
inline namespace geom {

// Irreducible plane projective curve over Q, identified with its canonical
// defining polynomial: homogeneous in X, Y, Z, primitive with positive
// leading coefficient.
class Curve {
 public:
  explicit Curve(Poly defining) : poly_(canonicalize(std::move(defining))) {
    if (!is_irreducible(poly_)) throw value_error("curve polynomial must be irreducible");
  }

  // Constructor for callers that already hold an irreducible factor (e.g. the
  // output of factor()); skips the irreducibility test.
  static Curve trusted(Poly defining) { return Curve(canonicalize(std::move(defining)), 0); }

  const Poly& poly() const { return poly_; }
  int degree() const { return poly_.total_degree(); }

  friend bool operator==(const Curve& a, const Curve& b) { return a.poly_ == b.poly_; }
  friend std::strong_ordering operator<=>(const Curve& a, const Curve& b) {
    return a.poly_ <=> b.poly_;
  }

  std::string str() const { return "{" + poly_.str() + " = 0}"; }

  // The three coordinate lines: horizontal axis (Y = 0), vertical axis
  // (X = 0), and the line at infinity (Z = 0).
  static Curve line_h() { return trusted(proj_Y()); }
  static Curve line_v() { return trusted(proj_X()); }
  static Curve line_inf() { return trusted(proj_Z()); }

 private:
  Curve(Poly canonical, int) : poly_(std::move(canonical)) {}

  static Poly canonicalize(Poly p) {
    if (p.vars() != projective_vars()) throw value_error("curves live in X, Y, Z");
    if (p.is_zero() || p.is_constant()) throw value_error("curve polynomial must be nonconstant");
    if (!p.is_homogeneous()) throw value_error("curve polynomial must be homogeneous");
    return p.primitive_part();
  }

  Poly poly_;
};

}  // namespace geom
}  // namespace symk2
