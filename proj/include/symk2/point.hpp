#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symk2/error.hpp"
#include "symk2/poly.hpp"
#include "symk2/rational.hpp"
#include "symk2/upoly.hpp"

namespace symk2 {
inline namespace geom {

namespace detail {

inline const std::vector<std::string>& uv_vars() {
  static const std::vector<std::string> v{"u", "v"};
  return v;
}

inline Poly qpoly_to_uv(const QPoly& p, std::size_t var) {
  Poly r(uv_vars());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    Exponents e(2, 0);
    e[var] = static_cast<int>(i);
    r.add_term(e, p.c[i]);
  }
  return r;
}

// Incremental Gaussian elimination over Q that remembers, for each inserted
// vector, how it decomposes over the ones inserted before it.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t dim) : dim_(dim) {}

  // Inserts v. If v is independent of the previous insertions the basis
  // grows and nothing is returned; otherwise returns coefficients c with
  // v = sum_i c[i] * (i-th previously inserted vector).
  std::optional<std::vector<Rat>> insert(std::vector<Rat> v) {
    if (v.size() != dim_) throw internal_error("linear span dimension mismatch");
    std::vector<Rat> combo(count_ + 1, Rat(0));
    combo[count_] = 1;
    for (const Row& row : rows_) {
      Rat c = v[row.pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < dim_; ++i) v[i] -= c * row.vec[i];
      for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] -= c * row.combo[i];
    }
    std::size_t pivot = dim_;
    for (std::size_t i = 0; i < dim_; ++i)
      if (v[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == dim_) {
      // dependent: 0 = combo over inserted vectors, with coefficient 1 on v
      std::vector<Rat> expr(count_, Rat(0));
      for (std::size_t i = 0; i < count_; ++i) expr[i] = -combo[i];
      return expr;
    }
    Rat inv = Rat(1) / v[pivot];
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows_.push_back(Row{std::move(v), std::move(combo), pivot});
    ++count_;
    return std::nullopt;
  }

  std::size_t size() const { return count_; }

 private:
  struct Row {
    std::vector<Rat> vec;
    std::vector<Rat> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows_;
  std::size_t dim_;
  std::size_t count_ = 0;
};

inline std::vector<Rat> nf_vector(const QPoly& a, std::size_t dim) {
  std::vector<Rat> v(dim, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i >= dim) throw internal_error("field element not reduced");
    v[i] = a.c[i];
  }
  return v;
}

// Monic minimal polynomial over Q of an element of Q[u]/(modulus).
inline QPoly nf_minpoly(const NumberField& k, const QPoly& alpha) {
  std::size_t dim = static_cast<std::size_t>(k.degree());
  LinearSpan span(dim);
  QPoly power = QPoly::constant(1);
  for (std::size_t e = 0; e <= dim; ++e) {
    if (auto expr = span.insert(nf_vector(power, dim))) {
      std::vector<Rat> coeffs = std::move(*expr);
      for (auto& c : coeffs) c = -c;  // power_e = sum expr_i power_i
      coeffs.resize(e + 1, Rat(0));
      coeffs[e] = 1;
      return QPoly(std::move(coeffs));
    }
    power = k.mul(power, alpha);
  }
  throw internal_error("minimal polynomial search exceeded field degree");
}

}  // namespace detail

// A closed point of the projective plane over Q, i.e. a Galois orbit of
// geometric points. Stored canonically: the affine chart with the highest
// priority coordinate nonzero (Z, then X, then Y), a monic irreducible
// p(u) and a q(u, v) monic in v, irreducible over Q[u]/(p), with
// deg_u of every v-coefficient below deg(p). The point's residue field is
// Q[u, v]/(p, q) with (u, v) the chart coordinates.
class ClosedPoint {
 public:
  Chart chart() const { return chart_; }
  const QPoly& p() const { return p_; }
  const Poly& q() const { return q_; }  // in variables u, v
  std::string p_str() const { return detail::qpoly_to_uv(p_, 0).str(); }

  int degree() const { return p_.degree() * q_.degree_in(1); }
  bool is_rational() const { return degree() == 1; }

  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
    return a.chart_ == b.chart_ && a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b) {
    if (auto c = static_cast<int>(a.chart_) <=> static_cast<int>(b.chart_); c != 0) return c;
    if (auto c = a.p_.c.size() <=> b.p_.c.size(); c != 0) return c;
    for (std::size_t i = a.p_.c.size(); i-- > 0;)
      if (a.p_.c[i] != b.p_.c[i]) return a.p_.c[i] < b.p_.c[i] ? std::strong_ordering::less
                                                               : std::strong_ordering::greater;
    return a.q_ <=> b.q_;
  }

  // --- rational constructors ---

  static ClosedPoint rational_affine(Chart chart, const Rat& a, const Rat& b) {
    ClosedPoint pt;
    pt.chart_ = chart;
    pt.p_ = QPoly::t_minus(a);
    pt.q_ = detail::qpoly_to_uv(QPoly::t_minus(b), 1);
    return pt;
  }

  static ClosedPoint rational_projective(const Rat& x, const Rat& y, const Rat& z) {
    if (x == 0 && y == 0 && z == 0) throw value_error("[0:0:0] is not a point");
    if (z != 0) return rational_affine(Chart::Z, x / z, y / z);
    if (x != 0) return rational_affine(Chart::X, y / x, z / x);
    return rational_affine(Chart::Y, x / y, z / y);
  }

  static ClosedPoint origin() { return rational_projective(0, 0, 1); }
  static ClosedPoint inf_h() { return rational_projective(1, 0, 0); }
  static ClosedPoint inf_v() { return rational_projective(0, 1, 0); }

  // Projective coordinates of a rational point: primitive integer vector,
  // first nonzero entry positive.
  std::array<Rat, 3> proj_coords() const {
    if (!is_rational()) throw value_error("projective coordinates need a rational point");
    Rat a = -p_.coeff(0);
    Rat b = -q_.evaluate({Rat(0), Rat(0)});
    std::array<Rat, 3> w;
    switch (chart_) {
      case Chart::Z: w = {a, b, Rat(1)}; break;
      case Chart::X: w = {Rat(1), a, b}; break;
      case Chart::Y: w = {a, Rat(1), b}; break;
    }
    Int l(1);
    for (const auto& c : w) l = int_lcm(l, rat_den(c));
    std::array<Rat, 3> v{w[0] * l, w[1] * l, w[2] * l};
    Int g(0);
    for (const auto& c : v) g = int_gcd(g, rat_num(c));
    for (auto& c : v) c /= Rat(g);
    for (const auto& c : v) {
      if (c == 0) continue;
      if (c < 0)
        for (auto& d : v) d = -d;
      break;
    }
    return v;
  }

  // --- canonicalization from number-field data ---

  // Point with chart coordinates (a, b) lying in Q[u]/(k.modulus). The
  // canonical triangular pair is recovered by linear algebra over Q; the
  // modulus need not be generated by (a, b) themselves.
  static ClosedPoint from_affine_field(Chart chart, const NumberField& k, const QPoly& a,
                                       const QPoly& b) {
    QPoly ra = k.reduce(a), rb = k.reduce(b);
    QPoly p = detail::nf_minpoly(k, ra);
    std::size_t e = static_cast<std::size_t>(p.degree());
    std::size_t dim = static_cast<std::size_t>(k.degree());

    // powers of a and of b
    std::vector<QPoly> apow(e), bpow;
    apow[0] = QPoly::constant(1);
    for (std::size_t i = 1; i < e; ++i) apow[i] = k.mul(apow[i - 1], ra);

    detail::LinearSpan span(dim);
    QPoly bp = QPoly::constant(1);
    for (std::size_t j = 0;; ++j) {
      // candidate b^j; if dependent on {a^i b^l : i < e, l < j} we are done
      auto expr = span.insert(detail::nf_vector(bp, dim));
      if (expr) {
        if (j == 0) throw internal_error("unit vector dependent in empty span");
        Poly q(detail::uv_vars());
        Exponents top(2, 0);
        top[1] = static_cast<int>(j);
        q.add_term(top, Rat(1));
        for (std::size_t idx = 0; idx < expr->size(); ++idx) {
          Rat c = (*expr)[idx];
          if (c == 0) continue;
          Exponents t(2, 0);
          t[0] = static_cast<int>(idx % e);
          t[1] = static_cast<int>(idx / e);
          q.add_term(t, -c);
        }
        ClosedPoint pt;
        pt.chart_ = chart;
        pt.p_ = p;
        pt.q_ = q;
        return pt;
      }
      // b^j independent: complete the block {a^i b^j : 1 <= i < e}
      for (std::size_t i = 1; i < e; ++i)
        if (span.insert(detail::nf_vector(k.mul(apow[i], bp), dim)))
          throw internal_error("triangular basis unexpectedly dependent");
      if (span.size() > dim) throw internal_error("triangular basis exceeded field degree");
      bp = k.mul(bp, rb);
    }
  }

  // Point with projective coordinates over Q[u]/(k.modulus), not all zero.
  // Picks the canonical chart by the Z > X > Y priority.
  static ClosedPoint from_projective_field(const NumberField& k, const QPoly& x, const QPoly& y,
                                           const QPoly& z) {
    QPoly rx = k.reduce(x), ry = k.reduce(y), rz = k.reduce(z);
    if (!rz.is_zero()) {
      QPoly inv = k.inv(rz);
      return from_affine_field(Chart::Z, k, k.mul(rx, inv), k.mul(ry, inv));
    }
    if (!rx.is_zero()) {
      QPoly inv = k.inv(rx);
      return from_affine_field(Chart::X, k, k.mul(ry, inv), k.mul(rz, inv));
    }
    if (ry.is_zero()) throw value_error("[0:0:0] is not a point");
    QPoly inv = k.inv(ry);
    return from_affine_field(Chart::Y, k, k.mul(rx, inv), k.mul(rz, inv));
  }

  std::string str() const {
    if (is_rational()) {
      auto v = proj_coords();
      return "[" + rat_str(v[0]) + ":" + rat_str(v[1]) + ":" + rat_str(v[2]) + "]";
    }
    return "{chart " + chart_name(chart_) + "; p: " + detail::qpoly_to_uv(p_, 0).str() +
           "; q: " + q_.str() + "}";
  }

 private:
  ClosedPoint() : p_(), q_(detail::uv_vars()) {}

  Chart chart_ = Chart::Z;
  QPoly p_;
  Poly q_;
};

}  // namespace geom
}  // namespace symk2
