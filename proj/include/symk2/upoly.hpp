#pragma once

#include <utility>
#include <vector>

#include "symk2/error.hpp"
#include "symk2/rational.hpp"

namespace symk2 {
inline namespace arith {

// Dense univariate polynomial over Q. c[i] is the coefficient of t^i;
// no trailing zeros are stored (zero polynomial has empty c).
struct QPoly {
  std::vector<Rat> c;

  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static QPoly constant(const Rat& a) {
    QPoly p;
    if (a != 0) p.c = {a};
    return p;
  }
  static QPoly t() { return QPoly({Rat(0), Rat(1)}); }
  // t - a
  static QPoly t_minus(const Rat& a) { return QPoly({-a, Rat(1)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rat& lc() const {
    if (c.empty()) throw value_error("zero polynomial has no leading coefficient");
    return c.back();
  }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : Rat(0);
  }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  QPoly operator-() const {
    QPoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend QPoly operator*(const QPoly& a, const Rat& s) {
    if (s == 0) return {};
    QPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
  }

  // Euclidean division over the field Q.
  friend std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw value_error("division by zero polynomial");
    QPoly q, r = a;
    if (r.degree() >= b.degree())
      q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      Rat f = r.lc() / b.lc();
      q.c[static_cast<std::size_t>(k)] = f;
      for (int i = 0; i <= b.degree(); ++i)
        r.c[static_cast<std::size_t>(i + k)] -= f * b.c[static_cast<std::size_t>(i)];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  QPoly make_monic() const {
    if (is_zero()) throw value_error("cannot make zero monic");
    QPoly r = *this;
    Rat l = lc();
    for (auto& v : r.c) v /= l;
    return r;
  }

  QPoly derivative() const {
    QPoly r;
    for (std::size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * static_cast<int>(i));
    r.trim();
    return r;
  }

  Rat eval(const Rat& a) const {
    Rat v(0);
    for (std::size_t i = c.size(); i-- > 0;) v = v * a + c[i];
    return v;
  }

  // Composition with t -> t + a.
  QPoly shift(const Rat& a) const {
    QPoly r, pw = constant(1), base = t_minus(-a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      r = r + pw * c[i];
      if (i + 1 < c.size()) pw = pw * base;
    }
    return r;
  }
};

inline QPoly qpoly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.make_monic();
}

// g = gcd monic, with u*a + v*b = g.
inline void qpoly_ext_gcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& u, QPoly& v) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  g = r0;
  u = s0;
  v = t0;
  if (!g.is_zero()) {
    Rat l = g.lc();
    g = g.make_monic();
    for (auto& x : u.c) x /= l;
    for (auto& x : v.c) x /= l;
  }
}

// ---------------------------------------------------------------------------
// Number field Q[u]/(p) with p monic irreducible, and polynomials over it.
// ---------------------------------------------------------------------------

// Elements are QPoly of degree < deg(modulus); ops reduce eagerly.
struct NumberField {
  QPoly modulus;

  explicit NumberField(QPoly m) : modulus(std::move(m)) {
    if (modulus.degree() < 1) throw value_error("number field modulus must be nonconstant");
  }
  int degree() const { return modulus.degree(); }

  QPoly reduce(const QPoly& a) const { return divmod(a, modulus).second; }
  QPoly add(const QPoly& a, const QPoly& b) const { return a + b; }
  QPoly sub(const QPoly& a, const QPoly& b) const { return a - b; }
  QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(a * b); }
  QPoly inv(const QPoly& a) const {
    if (a.is_zero()) throw value_error("inverse of zero field element");
    QPoly g, u, v;
    qpoly_ext_gcd(a, modulus, g, u, v);
    if (g.degree() != 0)
      throw internal_error("modulus not irreducible: nontrivial gcd in field inverse");
    // g is monic constant 1 after normalization, so u*a == 1 mod modulus
    return reduce(u);
  }
};

// Dense polynomial in one variable over a NumberField.
struct NFPoly {
  const NumberField* field = nullptr;
  std::vector<QPoly> c;  // c[i] reduced mod field->modulus

  NFPoly() = default;
  explicit NFPoly(const NumberField* k) : field(k) {}

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const QPoly& lc() const { return c.back(); }

  friend NFPoly operator-(const NFPoly& a, const NFPoly& b) {
    NFPoly r(a.field);
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      QPoly v = i < a.c.size() ? a.c[i] : QPoly();
      if (i < b.c.size()) v = v - b.c[i];
      r.c[i] = v;
    }
    r.trim();
    return r;
  }

  friend NFPoly operator*(const NFPoly& a, const NFPoly& b) {
    NFPoly r(a.field);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, QPoly());
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    for (auto& v : r.c) v = a.field->reduce(v);
    r.trim();
    return r;
  }

  NFPoly scaled(const QPoly& s) const {
    NFPoly r(field);
    r.c = c;
    for (auto& v : r.c) v = field->mul(v, s);
    r.trim();
    return r;
  }

  NFPoly make_monic() const {
    if (is_zero()) throw value_error("cannot make zero monic");
    return scaled(field->inv(lc()));
  }

  NFPoly derivative() const {
    NFPoly r(field);
    for (std::size_t i = 1; i < c.size(); ++i)
      r.c.push_back(field->reduce(c[i] * Rat(static_cast<int>(i))));
    r.trim();
    return r;
  }

  friend std::pair<NFPoly, NFPoly> divmod(const NFPoly& a, const NFPoly& b) {
    if (b.is_zero()) throw value_error("division by zero polynomial");
    NFPoly q(a.field), r = a;
    QPoly linv = a.field->inv(b.lc());
    if (r.degree() >= b.degree())
      q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, QPoly());
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      QPoly f = a.field->mul(r.lc(), linv);
      q.c[static_cast<std::size_t>(k)] = f;
      for (int i = 0; i <= b.degree(); ++i) {
        auto& dst = r.c[static_cast<std::size_t>(i + k)];
        dst = a.field->sub(dst, a.field->mul(f, b.c[static_cast<std::size_t>(i)]));
      }
      r.trim();
    }
    q.trim();
    return {q, r};
  }
};

inline NFPoly nfpoly_gcd(NFPoly a, NFPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.make_monic();
}

// The radical: product of distinct roots of f over the field (char 0).
inline NFPoly nfpoly_squarefree_part(const NFPoly& f) {
  NFPoly d = f.derivative();
  if (d.is_zero()) return f;  // constant f
  NFPoly g = nfpoly_gcd(f, d);
  if (g.degree() <= 0) return f.make_monic();
  return divmod(f, g).first.make_monic();
}

}  // namespace arith
}  // namespace symk2
