#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "symk2/error.hpp"
#include "symk2/modpoly.hpp"
#include "symk2/poly.hpp"
#include "symk2/rational.hpp"
#include "symk2/rng.hpp"
#include "symk2/upoly.hpp"

namespace symk2 {
inline namespace arith {

// ---- exact division ---------------------------------------------------------

// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw value_error("division by zero polynomial");
  if (a.vars() != b.vars()) throw value_error("variable tuple mismatch");
  Poly q(a.vars());
  Poly r = a;
  const Exponents& lb = b.lead_exponents();
  const Rat& cb = b.lead_coeff();
  Exponents diff(a.arity());
  while (!r.is_zero()) {
    const Exponents& lr = r.lead_exponents();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = lr[i] - lb[i];
      if (diff[i] < 0) return std::nullopt;
    }
    Poly t = Poly::monomial(a.vars(), diff, r.lead_coeff() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

inline Poly exact_divide(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw internal_error("expected exact polynomial division");
  return *q;
}

// ---- coefficient extraction ---------------------------------------------------

// Coefficient of var^k, with var zeroed out in the result.
inline Poly coeff_of_power(const Poly& p, std::size_t var, int k) {
  Poly r(p.vars());
  for (const auto& [e, c] : p.terms())
    if (e[var] == k) {
      Exponents f = e;
      f[var] = 0;
      r.add_term(f, c);
    }
  return r;
}

inline Poly lead_coeff_in(const Poly& p, std::size_t var) {
  return coeff_of_power(p, var, p.degree_in(var));
}

// Conversions between a multivariate polynomial that only involves `var` and
// the dense univariate representation.
inline QPoly poly_to_qpoly(const Poly& p, std::size_t var) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Rat(0));
  for (const auto& [e, coef] : p.terms()) c[static_cast<std::size_t>(e[var])] = coef;
  return QPoly(std::move(c));
}

inline Poly qpoly_to_poly(const QPoly& q, const std::vector<std::string>& vars,
                          std::size_t var) {
  Poly r(vars);
  Exponents e(vars.size(), 0);
  for (std::size_t i = 0; i < q.c.size(); ++i) {
    e[var] = static_cast<int>(i);
    r.add_term(e, q.c[i]);
  }
  return r;
}

// ---- gcd ----------------------------------------------------------------------

inline Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// Pseudo-remainder: lc(b,var)^(deg a - deg b + 1) * a = q*b + prem.
inline Poly pseudo_rem(const Poly& a, const Poly& b, std::size_t var) {
  int db = b.degree_in(var);
  Poly lb = lead_coeff_in(b, var);
  Poly r = a;
  int e = a.degree_in(var) - db + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Poly lr = lead_coeff_in(r, var);
    Exponents shift(a.arity(), 0);
    shift[var] = dr - db;
    r = lb * r - lr * Poly::monomial(a.vars(), shift, 1) * b;
    --e;
  }
  for (; e > 0; --e) r = lb * r;
  return r;
}

// content/primitive split with respect to one variable: content is the gcd of
// the univariate coefficients (canonical), primitive the exact quotient.
inline std::pair<Poly, Poly> split_content_in(const Poly& p, std::size_t var) {
  Poly cont(p.vars());
  for (const auto& [k, c] : p.coeffs_in(var)) {
    cont = poly_gcd(cont, c);
    if (cont.is_one()) break;
  }
  return {cont, exact_divide(p, cont)};
}

// Subresultant PRS gcd of two polynomials primitive in var with positive
// degree in var; the result is primitive in var but not otherwise normalized.
inline Poly subres_gcd(Poly a, Poly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  const auto& vars = a.vars();
  Poly g = Poly::constant(vars, 1);
  Poly h = Poly::constant(vars, 1);
  for (;;) {
    int delta = a.degree_in(var) - b.degree_in(var);
    Poly r = pseudo_rem(a, b, var);
    if (r.is_zero()) return split_content_in(b, var).second;
    if (r.degree_in(var) == 0) return Poly::constant(vars, 1);
    a = std::move(b);
    b = exact_divide(r, g * h.pow(static_cast<unsigned>(delta)));
    g = lead_coeff_in(a, var);
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_divide(g.pow(static_cast<unsigned>(delta)),
                       h.pow(static_cast<unsigned>(delta - 1)));
  }
}

// A variable with positive degree in both, or nothing. Prefers short PRS runs.
inline std::optional<std::size_t> shared_live_var(const Poly& a, const Poly& b) {
  std::optional<std::size_t> best;
  int best_score = 0;
  for (std::size_t v = 0; v < a.arity(); ++v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    if (da <= 0 || db <= 0) continue;
    int score = std::min(da, db);
    if (!best || score < best_score) {
      best = v;
      best_score = score;
    }
  }
  return best;
}

}  // namespace detail

// Greatest common divisor, normalized primitive with canonical sign.
// gcd(p, 0) = normalize(p); gcd(0, 0) = 0.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.vars() != b.vars()) throw value_error("variable tuple mismatch");
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), 1);
  if (a == b) return a.primitive_part();
  auto var = detail::shared_live_var(a, b);
  if (!var) return Poly::constant(a.vars(), 1);
  auto [ca, pa] = detail::split_content_in(a, *var);
  auto [cb, pb] = detail::split_content_in(b, *var);
  Poly cont = poly_gcd(ca, cb);
  Poly g = detail::subres_gcd(pa, pb, *var);
  return (cont * g).primitive_part();
}

inline Poly gcd(const Poly& a, const Poly& b) { return poly_gcd(a, b); }

inline Poly derivative(const Poly& p, std::size_t var) { return p.derivative(var); }

// ---- resultant ----------------------------------------------------------------

// Sylvester resultant with respect to var: determinant of the Sylvester
// matrix with the rows of p first, computed by fraction-free elimination.
inline Poly resultant(const Poly& p, const Poly& q, std::size_t var) {
  if (p.is_zero() && q.is_zero()) throw value_error("resultant of two zero polynomials");
  const auto& vars = p.vars();
  if (p.is_zero() || q.is_zero()) return Poly(vars);
  int m = p.degree_in(var), n = q.degree_in(var);
  std::size_t N = static_cast<std::size_t>(m + n);
  if (N == 0) return Poly::constant(vars, 1);
  std::vector<Poly> pc(static_cast<std::size_t>(m) + 1, Poly(vars));
  std::vector<Poly> qc(static_cast<std::size_t>(n) + 1, Poly(vars));
  for (const auto& [k, c] : p.coeffs_in(var)) pc[static_cast<std::size_t>(m - k)] = c;
  for (const auto& [k, c] : q.coeffs_in(var)) qc[static_cast<std::size_t>(n - k)] = c;
  std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N, Poly(vars)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(m); ++j) M[i][i + j] = pc[j];
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) M[n + i][i + j] = qc[j];

  // Bareiss fraction-free elimination.
  Poly prev = Poly::constant(vars, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t l = k + 1;
      while (l < N && M[l][k].is_zero()) ++l;
      if (l == N) return Poly(vars);
      std::swap(M[k], M[l]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j)
        M[i][j] = exact_divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = Poly(vars);
    }
    prev = M[k][k];
  }
  Poly res = M[N - 1][N - 1];
  return sign < 0 ? -res : res;
}

// ---- squarefree decomposition ---------------------------------------------------

struct SquarefreePart {
  Poly part;  // squarefree, primitive, canonical sign
  int multiplicity;
};

struct SquarefreeDecomposition {
  Rat unit;
  std::vector<SquarefreePart> parts;  // pairwise coprime; ascending multiplicity
};

namespace detail {

// Yun decomposition of a canonical polynomial; appends (part, mult) pairs
// into `acc` keyed by multiplicity.
inline void squarefree_into(const Poly& f, std::map<int, Poly>& acc) {
  if (f.is_constant()) return;
  std::size_t var = 0;
  while (f.degree_in(var) <= 0) ++var;
  auto [cont, prim] = split_content_in(f, var);
  if (!cont.is_constant()) squarefree_into(cont, acc);
  Poly fp = prim.derivative(var);
  Poly g = poly_gcd(prim, fp);
  Poly c = exact_divide(prim, g);
  Poly d = exact_divide(fp, g) - c.derivative(var);
  int i = 1;
  while (!c.is_constant()) {
    Poly a = poly_gcd(c, d);
    if (!a.is_constant()) {
      auto it = acc.find(i);
      if (it == acc.end())
        acc.emplace(i, a);
      else
        it->second *= a;
    }
    c = exact_divide(c, a);
    d = exact_divide(d, a) - c.derivative(var);
    ++i;
  }
}

}  // namespace detail

inline SquarefreeDecomposition squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw value_error("squarefree decomposition of zero polynomial");
  auto [u, f] = p.normalized();
  std::map<int, Poly> acc;
  detail::squarefree_into(f, acc);
  SquarefreeDecomposition out{u, {}};
  Poly check = Poly::constant(p.vars(), 1);
  for (const auto& [mult, part] : acc) {
    out.parts.push_back({part, mult});
    check *= part.pow(static_cast<unsigned>(mult));
  }
  auto ratio = try_divide(p, check);
  if (!ratio || !ratio->is_constant())
    throw internal_error("squarefree decomposition failed to reassemble");
  out.unit = ratio->constant_value();
  return out;
}

// Product of the distinct irreducible factors, canonical.
inline Poly squarefree_part(const Poly& p) {
  auto sq = squarefree_decomposition(p);
  Poly r = Poly::constant(p.vars(), 1);
  for (const auto& s : sq.parts) r *= s.part;
  return r;
}

// ---- factorization ---------------------------------------------------------------

struct FactorPair {
  Poly factor;  // irreducible, primitive, canonical sign
  int multiplicity;
};

struct Factorization {
  Rat unit;
  std::vector<FactorPair> factors;  // pairwise non-associate, sorted
};

namespace detail {

inline bool is_small_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline ZPoly poly_to_zpoly(const Poly& p, std::size_t var) {
  ZPoly z;
  z.c.assign(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Int(0));
  for (const auto& [e, c] : p.terms()) {
    if (rat_den(c) != 1) throw internal_error("expected integer coefficients");
    z.c[static_cast<std::size_t>(e[var])] = rat_num(c);
  }
  z.trim();
  return z;
}

inline Poly zpoly_to_poly(const ZPoly& z, const std::vector<std::string>& vars,
                          std::size_t var) {
  Poly r(vars);
  Exponents e(vars.size(), 0);
  for (std::size_t i = 0; i < z.c.size(); ++i) {
    e[var] = static_cast<int>(i);
    r.add_term(e, Rat(z.c[i]));
  }
  return r;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Zassenhaus: monic squarefree f over Z into monic irreducible factors.
inline std::vector<ZPoly> zpoly_factor_monic(const ZPoly& f) {
  int n = f.degree();
  if (n <= 0) return {};
  if (n == 1) return {f};

  // a prime with squarefree reduction
  long pl = 3;
  for (;;) {
    while (!is_small_prime(pl)) ++pl;
    ModPoly fbar(Int(pl), f);
    if (fbar.degree() == n && modpoly_gcd(fbar, fbar.derivative()).degree() == 0) break;
    ++pl;
    if (pl > 100000) throw internal_error("no squarefree modular reduction found");
  }
  Int p(pl);

  Rng rng(Rng::mix(0x5eedull, static_cast<std::uint64_t>(n) * 1000003ull +
                                  static_cast<std::uint64_t>(pl)));
  std::vector<ModPoly> modfacs = fp_factor_squarefree(ModPoly(p, f), rng);
  if (modfacs.size() == 1) return {f};
  std::sort(modfacs.begin(), modfacs.end(),
            [](const ModPoly& a, const ModPoly& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.c < b.c;
            });

  // coefficient bound for monic factors, then lift past twice the bound
  Int bound = (Int(1) << static_cast<unsigned>(n)) * (n + 1) * f.max_norm();
  Int target = 2 * bound + 1;
  int steps = 1;
  Int q = p;
  while (q < target) {
    q *= p;
    ++steps;
  }
  std::vector<ModPoly> pool = hensel_lift(f, modfacs, p, steps);

  std::vector<ZPoly> out;
  ZPoly rem = f;
  std::size_t cnt = 1;
  while (2 * cnt <= pool.size()) {
    std::vector<std::size_t> idx(cnt);
    std::iota(idx.begin(), idx.end(), 0);
    bool found = false;
    do {
      ModPoly prod = ModPoly::constant(q, 1);
      for (std::size_t i : idx) prod = prod * pool[i];
      ZPoly cand = prod.lift_symmetric();
      auto [ok, quot] = divide_by_monic(rem, cand);
      if (ok) {
        out.push_back(cand);
        rem = quot;
        for (std::size_t i = idx.size(); i-- > 0;)
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
    } while (next_combination(idx, pool.size()));
    if (!found) ++cnt;
  }
  if (rem.degree() > 0) out.push_back(rem);
  std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
  });
  return out;
}

inline std::vector<Poly> factor_squarefree(const Poly& s);

// Univariate: monicize, factor over Z, map back. Input canonical squarefree.
inline std::vector<Poly> factor_squarefree_univariate(const Poly& s, std::size_t var) {
  int n = s.degree_in(var);
  if (n == 1) return {s};
  ZPoly z = poly_to_zpoly(s, var);
  const Int& L = z.c.back();
  std::vector<Int> lpow(static_cast<std::size_t>(n) + 1, Int(1));
  for (std::size_t i = 1; i < lpow.size(); ++i) lpow[i] = lpow[i - 1] * L;
  ZPoly zh;
  zh.c.assign(static_cast<std::size_t>(n) + 1, Int(0));
  for (int j = 0; j < n; ++j)
    zh.c[static_cast<std::size_t>(j)] =
        z.c[static_cast<std::size_t>(j)] * lpow[static_cast<std::size_t>(n - 1 - j)];
  zh.c[static_cast<std::size_t>(n)] = 1;
  zh.trim();

  std::vector<Poly> out;
  Poly check = Poly::constant(s.vars(), 1);
  for (const ZPoly& hf : zpoly_factor_monic(zh)) {
    Poly g(s.vars());
    Exponents e(s.arity(), 0);
    for (std::size_t i = 0; i < hf.c.size(); ++i) {
      e[var] = static_cast<int>(i);
      g.add_term(e, Rat(hf.c[i] * lpow[i]));
    }
    Poly canon = g.primitive_part();
    check *= canon;
    out.push_back(std::move(canon));
  }
  if (check != s) throw internal_error("univariate factorization failed to reassemble");
  return out;
}

// Homogeneous in exactly two live variables: dehomogenize to one variable.
inline std::vector<Poly> factor_squarefree_homog2(const Poly& s, std::size_t vi,
                                                  std::size_t vj) {
  if (vi > vj) std::swap(vi, vj);
  Poly q = s.evaluate_partial(vj, 1).primitive_part();
  std::vector<Poly> out;
  Poly check = Poly::constant(s.vars(), 1);
  for (const Poly& h : factor_squarefree_univariate(q, vi)) {
    int dh = h.degree_in(vi);
    Poly H(s.vars());
    for (const auto& [e, c] : h.terms()) {
      Exponents f = e;
      f[vj] = dh - e[vi];
      H.add_term(f, c);
    }
    Poly canon = H.primitive_part();
    check *= canon;
    out.push_back(std::move(canon));
  }
  if (check != s) throw internal_error("homogeneous factorization failed to reassemble");
  return out;
}

using TSeries = std::vector<QPoly>;  // coefficient of t^k, a polynomial in the main variable

inline TSeries tseries_mul(const TSeries& a, const TSeries& b, std::size_t K) {
  TSeries r(K);
  for (std::size_t i = 0; i < a.size() && i < K; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < K; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

// Lift the coprime monic factorization S(0,y) = prod h_i to a monic
// factorization of S mod t^K, by linear steps.
inline std::vector<TSeries> tseries_hensel(const TSeries& S, const std::vector<QPoly>& h,
                                           std::size_t K) {
  std::size_t r = h.size();
  std::vector<QPoly> w(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly prod = QPoly::constant(1);
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) prod = divmod(prod * h[j], h[i]).second;
    QPoly g, u, v;
    qpoly_ext_gcd(prod, h[i], g, u, v);
    if (g.degree() != 0) throw internal_error("hensel: factors not coprime");
    w[i] = divmod(u * QPoly::constant(Rat(1) / g.coeff(0)), h[i]).second;
  }
  std::vector<TSeries> H(r, TSeries(K));
  for (std::size_t i = 0; i < r; ++i) H[i][0] = h[i];
  for (std::size_t j = 1; j < K; ++j) {
    TSeries P(1, QPoly::constant(1));
    for (const auto& Hi : H) P = tseries_mul(P, Hi, j + 1);
    QPoly e = (j < S.size() ? S[j] : QPoly()) - P[j];
    if (e.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i)
      H[i][j] = H[i][j] + divmod(e * w[i], h[i]).second;
  }
  return H;
}

inline Poly tseries_to_poly(const TSeries& s, const std::vector<std::string>& vars,
                            std::size_t vx, std::size_t vy) {
  Poly r(vars);
  Exponents e(vars.size(), 0);
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t j = 0; j < s[k].c.size(); ++j) {
      if (s[k].c[j] == 0) continue;
      e[vx] = static_cast<int>(k);
      e[vy] = static_cast<int>(j);
      r.add_term(e, s[k].c[j]);
    }
  return r;
}

inline TSeries poly_to_tseries(const Poly& p, std::size_t vx, std::size_t vy,
                               std::size_t K) {
  TSeries out(K);
  std::vector<std::vector<Rat>> buf(K);
  for (const auto& [e, c] : p.terms()) {
    auto& row = buf[static_cast<std::size_t>(e[vx])];
    if (row.size() <= static_cast<std::size_t>(e[vy]))
      row.resize(static_cast<std::size_t>(e[vy]) + 1, Rat(0));
    row[static_cast<std::size_t>(e[vy])] = c;
  }
  for (std::size_t k = 0; k < K; ++k) out[k] = QPoly(std::move(buf[k]));
  return out;
}

// General bivariate: monicize in vy, specialize vx, lift, recombine.
// Input canonical squarefree, primitive in vy, live in both variables,
// degree at least 2 in vy.
inline std::vector<Poly> factor_squarefree_bivariate(const Poly& pp, std::size_t vx,
                                                     std::size_t vy) {
  const auto& vars = pp.vars();
  int n = pp.degree_in(vy);
  Poly L = lead_coeff_in(pp, vy);

  // monicize: shat = L^(n-1) * pp(x, y/L)
  std::map<int, Poly> coeffs = pp.coeffs_in(vy);
  std::map<int, Poly> hatc;
  for (const auto& [j, c] : coeffs)
    hatc.emplace(j, j == n ? Poly::constant(vars, 1)
                           : c * L.pow(static_cast<unsigned>(n - 1 - j)));
  Poly shat = Poly::from_coeffs_in(vy, hatc, vars);

  // specialization point with squarefree image
  Rat a(0);
  QPoly u;
  for (long k = 0;; ++k) {
    long cand = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
    Poly ev = shat.evaluate_partial(vx, Rat(cand));
    QPoly uq = poly_to_qpoly(ev, vy);
    if (uq.degree() == n && qpoly_gcd(uq, uq.derivative()).degree() == 0) {
      a = Rat(cand);
      u = uq;
      break;
    }
    if (k > 4 * (shat.degree_in(vx) + 1) * n + 16)
      throw internal_error("no squarefree specialization found");
  }

  Poly uPoly = qpoly_to_poly(u, vars, vy).primitive_part();
  std::vector<Poly> ufacs = factor_squarefree_univariate(uPoly, vy);
  if (ufacs.size() == 1) return {pp};
  std::vector<QPoly> h;
  for (const Poly& f : ufacs) h.push_back(poly_to_qpoly(f, vy).make_monic());

  // shift so the specialization point is t = 0, lift, recombine
  Poly xplusa = Poly::variable(vars, vx) + Poly::constant(vars, a);
  Poly S = shat.substitute(vx, xplusa);
  std::size_t K = static_cast<std::size_t>(S.degree_in(vx)) + 1;
  std::vector<TSeries> pool = tseries_hensel(poly_to_tseries(S, vx, vy, K), h, K);

  std::vector<Poly> hat_factors;
  Poly rem = S;
  std::size_t cnt = 1;
  while (2 * cnt <= pool.size()) {
    std::vector<std::size_t> idx(cnt);
    std::iota(idx.begin(), idx.end(), 0);
    bool found = false;
    do {
      TSeries prod(1, QPoly::constant(1));
      for (std::size_t i : idx) prod = tseries_mul(prod, pool[i], K);
      Poly cand = tseries_to_poly(prod, vars, vx, vy);
      auto quot = try_divide(rem, cand);
      if (quot) {
        hat_factors.push_back(cand);
        rem = *quot;
        for (std::size_t i = idx.size(); i-- > 0;)
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
    } while (next_combination(idx, pool.size()));
    if (!found) ++cnt;
  }
  if (rem.degree_in(vy) > 0) hat_factors.push_back(rem);

  // shift back and undo the monicization: pp-factor = pp part of F(x, L*y)
  Poly xminusa = Poly::variable(vars, vx) - Poly::constant(vars, a);
  Poly Ly = L * Poly::variable(vars, vy);
  std::vector<Poly> out;
  Poly check = Poly::constant(vars, 1);
  for (const Poly& Fh : hat_factors) {
    // undoing the monicization scales each factor by a power of L; strip it
    // as content with respect to the main variable
    Poly F = Fh.substitute(vx, xminusa).substitute(vy, Ly);
    F = split_content_in(F, vy).second.primitive_part();
    check *= F;
    out.push_back(std::move(F));
  }
  if (check != pp) throw internal_error("bivariate factorization failed to reassemble");
  return out;
}

// Dispatcher for canonical squarefree nonconstant polynomials.
inline std::vector<Poly> factor_squarefree(const Poly& s) {
  std::vector<std::size_t> live;
  for (std::size_t v = 0; v < s.arity(); ++v)
    if (s.degree_in(v) > 0) live.push_back(v);

  if (live.size() == 1) return factor_squarefree_univariate(s, live[0]);

  if (live.size() == 2) {
    std::size_t vi = live[0], vj = live[1];
    // strip single variable factors (squarefree input: multiplicity one)
    for (std::size_t v : live) {
      bool divides = true;
      for (const auto& [e, c] : s.terms())
        if (e[v] == 0) {
          divides = false;
          break;
        }
      if (divides) {
        std::vector<Poly> out{Poly::variable(s.vars(), v)};
        Poly rest = exact_divide(s, out[0]);
        if (!rest.is_constant())
          for (Poly& f : factor_squarefree(rest)) out.push_back(std::move(f));
        return out;
      }
    }
    if (s.is_homogeneous()) return factor_squarefree_homog2(s, vi, vj);

    // main variable: prefer a constant leading coefficient, then low degree
    auto score = [&](std::size_t v) {
      return std::make_pair(lead_coeff_in(s, v).is_constant() ? 0 : 1, s.degree_in(v));
    };
    std::size_t vy = score(vj) <= score(vi) ? vj : vi;
    std::size_t vx = vy == vj ? vi : vj;

    auto [cont, pp] = split_content_in(s, vy);
    std::vector<Poly> out;
    if (!cont.is_constant()) out = factor_squarefree(cont);
    if (pp.degree_in(vx) == 0) {
      for (Poly& f : factor_squarefree_univariate(pp.primitive_part(), vy))
        out.push_back(std::move(f));
    } else if (pp.degree_in(vy) == 1) {
      out.push_back(pp.primitive_part());
    } else {
      for (Poly& f : factor_squarefree_bivariate(pp.primitive_part(), vx, vy))
        out.push_back(std::move(f));
    }
    return out;
  }

  if (live.size() == 3 && s.is_homogeneous()) {
    std::vector<Poly> out;
    Poly rest = s;
    for (std::size_t v : live) {
      bool divides = true;
      for (const auto& [e, c] : rest.terms())
        if (e[v] == 0) {
          divides = false;
          break;
        }
      if (divides) {
        out.push_back(Poly::variable(s.vars(), v));
        rest = exact_divide(rest, out.back());
      }
    }
    if (!rest.is_constant()) {
      std::size_t vz = live[2];
      Poly p2 = rest.evaluate_partial(vz, 1).primitive_part();
      Poly check = Poly::constant(s.vars(), 1);
      std::vector<Poly> homog;
      for (const Poly& f : factor_squarefree(p2)) {
        int df = f.total_degree();
        Poly H(s.vars());
        for (const auto& [e, c] : f.terms()) {
          Exponents g = e;
          g[vz] = df - exp_total(e);
          H.add_term(g, c);
        }
        Poly canon = H.primitive_part();
        check *= canon;
        homog.push_back(std::move(canon));
      }
      if (check != rest) throw internal_error("homogeneous factorization failed to reassemble");
      for (Poly& f : homog) out.push_back(std::move(f));
    }
    return out;
  }

  throw value_error(
      "factorization supports at most two live variables, or three when homogeneous");
}

}  // namespace detail

inline Factorization factor(const Poly& p) {
  if (p.is_zero()) throw value_error("factorization of zero polynomial");
  SquarefreeDecomposition sq = squarefree_decomposition(p);
  Factorization out{sq.unit, {}};
  for (const auto& [part, mult] : sq.parts)
    for (Poly& irr : detail::factor_squarefree(part))
      out.factors.push_back({std::move(irr), mult});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPair& a, const FactorPair& b) { return a.factor < b.factor; });
  Poly check = Poly::constant(p.vars(), 1);
  for (const auto& [f, m] : out.factors) check *= f.pow(static_cast<unsigned>(m));
  auto ratio = try_divide(p, check);
  if (!ratio || !ratio->is_constant())
    throw internal_error("factorization failed to reassemble");
  out.unit = ratio->constant_value();
  return out;
}

// Nonconstant and equal to its single factor with multiplicity one.
inline bool is_irreducible(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return false;
  Factorization f = factor(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace arith
}  // namespace symk2
