#pragma once

#include <utility>
#include <vector>

#include "symk2/error.hpp"
#include "symk2/rational.hpp"
#include "symk2/rng.hpp"

namespace symk2 {
inline namespace arith {

// Dense univariate polynomial over Z.
struct ZPoly {
  std::vector<Int> c;

  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Int& lc() const { return c.back(); }

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c == b.c; }

  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }

  // Exact division by a monic polynomial; returns nothing if not divisible.
  friend std::pair<bool, ZPoly> divide_by_monic(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero() || b.lc() != 1) throw value_error("divisor must be monic");
    ZPoly q, r = a;
    if (r.degree() >= b.degree())
      q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, Int(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      Int f = r.lc();
      q.c[static_cast<std::size_t>(k)] = f;
      for (int i = 0; i <= b.degree(); ++i)
        r.c[static_cast<std::size_t>(i + k)] -= f * b.c[static_cast<std::size_t>(i)];
      r.trim();
    }
    q.trim();
    return {r.is_zero(), q};
  }

  Int max_norm() const {
    Int m(0);
    for (const auto& v : c) {
      Int a = abs(v);
      if (a > m) m = a;
    }
    return m;
  }
};

// Dense univariate polynomial with coefficients in Z/m, stored in [0, m).
struct ModPoly {
  Int m;
  std::vector<Int> c;

  explicit ModPoly(Int mod) : m(std::move(mod)) {}
  ModPoly(Int mod, const ZPoly& z) : m(std::move(mod)) {
    c.reserve(z.c.size());
    for (const auto& v : z.c) c.push_back(((v % m) + m) % m);
    trim();
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Int& lc() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  static ModPoly x(const Int& m) {
    ModPoly p(m);
    p.c = {Int(0), Int(1)};
    return p;
  }
  static ModPoly constant(const Int& m, const Int& a) {
    ModPoly p(m);
    Int v = ((a % m) + m) % m;
    if (v != 0) p.c = {v};
    return p;
  }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.m);
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.m;
    for (auto& v : r.c) v %= a.m;
    r.trim();
    return r;
  }
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.m);
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = ((r.c[i] - b.c[i]) % a.m + a.m) % a.m;
    r.trim();
    return r;
  }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.m);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    for (auto& v : r.c) v %= a.m;
    r.trim();
    return r;
  }

  // Modular inverse of a scalar; m must be prime for general use.
  static Int inv_scalar(const Int& a, const Int& m) {
    Int g, x, y;
    ext_gcd(((a % m) + m) % m, m, g, x, y);
    if (g != 1) throw internal_error("non-invertible scalar in modular arithmetic");
    return ((x % m) + m) % m;
  }

  static void ext_gcd(Int a, Int b, Int& g, Int& x, Int& y) {
    Int x0(1), y0(0), x1(0), y1(1);
    while (b != 0) {
      Int q = a / b, r = a % b;
      a = b;
      b = r;
      Int x2 = x0 - q * x1, y2 = y0 - q * y1;
      x0 = x1; x1 = x2;
      y0 = y1; y1 = y2;
    }
    g = a; x = x0; y = y0;
  }

  friend std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw value_error("division by zero polynomial");
    Int linv = inv_scalar(b.lc(), a.m);
    ModPoly q(a.m), r = a;
    if (r.degree() >= b.degree())
      q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, Int(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      Int f = (r.lc() * linv) % a.m;
      q.c[static_cast<std::size_t>(k)] = f;
      for (int i = 0; i <= b.degree(); ++i) {
        auto& dst = r.c[static_cast<std::size_t>(i + k)];
        dst = ((dst - f * b.c[static_cast<std::size_t>(i)]) % a.m + a.m) % a.m;
      }
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  ModPoly make_monic() const {
    if (is_zero()) return *this;
    Int linv = inv_scalar(lc(), m);
    ModPoly r = *this;
    for (auto& v : r.c) v = (v * linv) % m;
    return r;
  }

  ModPoly derivative() const {
    ModPoly r(m);
    for (std::size_t i = 1; i < c.size(); ++i) r.c.push_back((c[i] * static_cast<int>(i)) % m);
    r.trim();
    return r;
  }

  ZPoly lift() const {
    ZPoly z;
    z.c = c;
    z.trim();
    return z;
  }

  // Coefficients mapped to the symmetric range (-m/2, m/2].
  ZPoly lift_symmetric() const {
    ZPoly z;
    z.c.reserve(c.size());
    Int half = m / 2;
    for (const auto& v : c) z.c.push_back(v > half ? Int(v - m) : v);
    z.trim();
    return z;
  }
};

inline ModPoly modpoly_gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

inline ModPoly modpoly_powmod(const ModPoly& base, Int e, const ModPoly& f) {
  ModPoly r = ModPoly::constant(base.m, 1);
  ModPoly b = divmod(base, f).second;
  while (e > 0) {
    if ((e & 1) != 0) r = divmod(r * b, f).second;
    e >>= 1;
    if (e > 0) b = divmod(b * b, f).second;
  }
  return r;
}

namespace detail {

// Cantor-Zassenhaus over F_p (p odd prime), f monic squarefree.
// Deterministically seeded; returns monic irreducible factors.
inline void cz_equal_degree(const ModPoly& f, int d, Rng& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Int& p = f.m;
  Int e = (pow(p, static_cast<unsigned>(d)) - 1) / 2;
  for (;;) {
    ModPoly r(p);
    r.c.resize(static_cast<std::size_t>(f.degree()), Int(0));
    for (auto& v : r.c) v = Int(rng.next() % 1000000007ull) % p;
    r.trim();
    if (r.degree() < 1) continue;
    ModPoly s = modpoly_powmod(r, e, f);
    s = s - ModPoly::constant(p, 1);
    ModPoly g = modpoly_gcd(s, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      cz_equal_degree(g, d, rng, out);
      cz_equal_degree(divmod(f, g).first.make_monic(), d, rng, out);
      return;
    }
  }
}

inline std::vector<ModPoly> fp_factor_squarefree(const ModPoly& f0, Rng& rng) {
  std::vector<ModPoly> out;
  ModPoly f = f0.make_monic();
  const Int& p = f.m;
  ModPoly h = ModPoly::x(p);
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.push_back(f);
      break;
    }
    h = modpoly_powmod(h, p, f);
    ModPoly g = modpoly_gcd(h - ModPoly::x(p), f);
    if (g.degree() > 0) {
      cz_equal_degree(g, d, rng, out);
      f = divmod(f, g).first.make_monic();
      h = divmod(h, f).second;
    }
  }
  return out;
}

// Linear multifactor Hensel lifting: f monic over Z, f = prod(g_i) mod p with
// g_i monic pairwise coprime mod p. Lifts to monic G_i with f = prod(G_i)
// mod p^steps.
inline std::vector<ModPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& gs,
                                        const Int& p, int steps) {
  std::size_t r = gs.size();
  // Bezout data mod p: w_i = inverse of prod_{j != i} g_j modulo g_i.
  std::vector<ModPoly> w;
  w.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    ModPoly prod = ModPoly::constant(p, 1);
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) prod = divmod(prod * gs[j], gs[i]).second;
    // invert prod mod g_i via extended Euclid over F_p[y]
    ModPoly r0 = gs[i], r1 = prod;
    ModPoly t0(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
      auto [q, rem] = divmod(r0, r1);
      ModPoly t2 = t0 - divmod(q * t1, gs[i]).second;
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = divmod(t2, gs[i]).second;
    }
    if (r0.degree() != 0) throw internal_error("hensel: factors not coprime mod p");
    Int cinv = ModPoly::inv_scalar(r0.c[0], p);
    ModPoly wi = t0;
    for (auto& v : wi.c) v = (v * cinv) % p;
    wi.trim();
    w.push_back(divmod(wi, gs[i]).second);
  }

  Int q = p;  // current modulus p^j
  std::vector<ModPoly> G = gs;
  for (int step = 1; step < steps; ++step) {
    Int qn = q * p;
    // recompute factors mod the larger modulus
    for (auto& g : G) g.m = qn;
    // error E = (f - prod G) / q mod p
    ModPoly prod = ModPoly::constant(qn, 1);
    for (const auto& g : G) prod = prod * g;
    ZPoly diff = f - prod.lift();
    ModPoly e(p);
    e.c.reserve(diff.c.size());
    for (auto& v : diff.c) {
      if (v % q != 0) throw internal_error("hensel: error term not divisible by modulus");
      e.c.push_back((((v / q) % p) + p) % p);
    }
    e.trim();
    if (e.is_zero()) {
      q = qn;
      continue;
    }
    for (std::size_t i = 0; i < r; ++i) {
      ModPoly gi_p(p);
      gi_p.c.reserve(G[i].c.size());
      for (const auto& v : G[i].c) gi_p.c.push_back(v % p);
      gi_p.trim();
      ModPoly delta = divmod(e * w[i], gi_p).second;
      // G_i += q * delta
      for (std::size_t k = 0; k < delta.c.size(); ++k) {
        if (G[i].c.size() <= k) G[i].c.resize(k + 1, Int(0));
        G[i].c[k] = (G[i].c[k] + q * delta.c[k]) % qn;
      }
      G[i].trim();
    }
    q = qn;
  }
  return G;
}

}  // namespace detail

}  // namespace arith
}  // namespace symk2
