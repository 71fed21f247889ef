#pragma once

#include <map>
#include <string>
#include <utility>

#include "symk2/curve.hpp"
#include "symk2/factor.hpp"
#include "symk2/poly.hpp"
#include "symk2/ratfunc.hpp"

namespace symk2 {
inline namespace geom {

// Formal Z-linear combination of irreducible curves; zero coefficients are
// never stored.
class Divisor {
 public:
  Divisor() = default;

  const std::map<Curve, int>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  int coefficient(const Curve& c) const {
    auto it = comps_.find(c);
    return it == comps_.end() ? 0 : it->second;
  }

  void add(const Curve& c, int mult) {
    if (mult == 0) return;
    auto [it, inserted] = comps_.emplace(c, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) comps_.erase(it);
    }
  }

  // Total degree as a curve class: sum of deg(C) weighted by multiplicity.
  int degree() const {
    int d = 0;
    for (const auto& [c, m] : comps_) d += c.degree() * m;
    return d;
  }

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [c, m] : b.comps_) a.add(c, m);
    return a;
  }
  friend Divisor operator-(Divisor a, const Divisor& b) {
    for (const auto& [c, m] : b.comps_) a.add(c, -m);
    return a;
  }
  Divisor operator-() const {
    Divisor r;
    for (const auto& [c, m] : comps_) r.comps_.emplace(c, -m);
    return r;
  }
  friend Divisor operator*(int k, const Divisor& d) {
    Divisor r;
    if (k != 0)
      for (const auto& [c, m] : d.comps_) r.comps_.emplace(c, k * m);
    return r;
  }

  friend bool operator==(const Divisor& a, const Divisor& b) { return a.comps_ == b.comps_; }

  std::string str() const {
    if (comps_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, m] : comps_) {
      if (m < 0)
        out += first ? "-" : " - ";
      else if (!first)
        out += " + ";
      int a = m < 0 ? -m : m;
      if (a != 1) out += std::to_string(a) + "*";
      out += c.str();
      first = false;
    }
    return out;
  }

 private:
  std::map<Curve, int> comps_;
};

// Order of vanishing of the divisor along a curve.
inline int valuation(const Divisor& d, const Curve& c) { return d.coefficient(c); }

// Splits into effective part and (effective) polar part: d = pos - neg.
inline std::pair<Divisor, Divisor> pos_neg_parts(const Divisor& d) {
  Divisor pos, neg;
  for (const auto& [c, m] : d.components()) {
    if (m > 0)
      pos.add(c, m);
    else
      neg.add(c, -m);
  }
  return {pos, neg};
}

// Divisor of a rational function on the projective plane: zeros and poles of
// the homogenized numerator and denominator, plus the multiplicity along the
// line at infinity fixed by the degree gap.
inline Divisor principal_divisor(const RationalFunction& f) {
  if (f.is_zero()) throw value_error("principal divisor of zero");
  Divisor d;
  auto accumulate = [&d](const Poly& affine, int sign) {
    int deg = affine.total_degree();
    Poly h = homogenize(affine);
    for (const auto& part : factor(h).factors) d.add(Curve::trusted(part.factor), sign * part.multiplicity);
    return deg;
  };
  int deg_num = accumulate(f.num(), +1);
  int deg_den = accumulate(f.den(), -1);
  d.add(Curve::line_inf(), deg_den - deg_num);
  return d;
}

}  // namespace geom
}  // namespace symk2
