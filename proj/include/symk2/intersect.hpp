#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "symk2/curve.hpp"
#include "symk2/cycle.hpp"
#include "symk2/divisor.hpp"
#include "symk2/error.hpp"
#include "symk2/factor.hpp"
#include "symk2/point.hpp"
#include "symk2/poly.hpp"
#include "symk2/shear.hpp"
#include "symk2/upoly.hpp"

namespace symk2 {
inline namespace geom {

namespace detail {

// View an affine polynomial in (x, y) as a polynomial in y whose coefficients
// live in Q[u]/(modulus), substituting the field generator for x.
inline NFPoly to_nfpoly(const Poly& affine, const NumberField& k) {
  NFPoly r(&k);
  for (const auto& [j, cf] : affine.coeffs_in(1)) {
    while (static_cast<int>(r.c.size()) <= j) r.c.emplace_back();
    r.c[static_cast<std::size_t>(j)] = k.reduce(poly_to_qpoly(cf, 0));
  }
  r.trim();
  return r;
}

// One attempt at the sheared-resultant intersection; nothing when the shear
// fails a genericity test.
inline std::optional<ZeroCycle> try_intersection(const Curve& c1, const Curve& c2,
                                                 const Shear& shear) {
  Poly ps = shear.transform(c1.poly());
  Poly qs = shear.transform(c2.poly());
  int d1 = c1.degree(), d2 = c2.degree();

  // The projection center [0:1:0] must avoid both curves, i.e. the
  // coefficient of Y^deg (a scalar, by homogeneity) must be nonzero.
  if (coeff_of_power(ps, 1, d1).is_zero()) return std::nullopt;
  if (coeff_of_power(qs, 1, d2).is_zero()) return std::nullopt;

  Poly r = resultant(ps, qs, 1);
  if (r.is_zero()) throw internal_error("vanishing resultant of distinct irreducible curves");
  if (!r.is_homogeneous() || r.total_degree() != d1 * d2)
    throw internal_error("resultant degree mismatch");

  Factorization fac = factor(r);
  // No intersection may sit on the sheared line at infinity: Z must not
  // divide the resultant.
  for (const auto& part : fac.factors)
    if (part.factor == proj_Z()) return std::nullopt;

  ZeroCycle cycle;
  for (const auto& part : fac.factors) {
    // Minimal polynomial of the fiber abscissa.
    QPoly p = poly_to_qpoly(part.factor.evaluate_partial(2, Rat(1)), 0).make_monic();
    NumberField k(p);

    NFPoly a = to_nfpoly(dehomogenize(ps, Chart::Z), k);
    NFPoly b = to_nfpoly(dehomogenize(qs, Chart::Z), k);
    NFPoly g = nfpoly_gcd(a, b);
    if (g.degree() < 1)
      throw internal_error("resultant root without a common fiber point");
    NFPoly sf = nfpoly_squarefree_part(g);
    // Genericity: each fiber must carry a single geometric point, rational
    // over the residue field of the abscissa.
    if (sf.degree() != 1) return std::nullopt;
    QPoly rho = -sf.c[0];

    // Back to the original coordinates: the sheared point is (u, rho(u), 1).
    const Mat3& minv = shear.inverse_matrix();
    std::array<QPoly, 3> old_coords;
    for (int i = 0; i < 3; ++i) {
      QPoly acc = QPoly::constant(minv.a[static_cast<std::size_t>(i)][2]);
      acc = acc + QPoly::t() * minv.a[static_cast<std::size_t>(i)][0];
      acc = acc + rho * minv.a[static_cast<std::size_t>(i)][1];
      old_coords[static_cast<std::size_t>(i)] = k.reduce(acc);
    }
    ClosedPoint pt =
        ClosedPoint::from_projective_field(k, old_coords[0], old_coords[1], old_coords[2]);
    cycle.add(pt, part.multiplicity);
  }
  return cycle;
}

}  // namespace detail

// Diagnostics for the genericity retry loop.
struct IntersectionStats {
  std::uint64_t calls = 0;
  std::uint64_t retries = 0;
};

// Intersection cycle of two distinct irreducible curves: every common point
// with its local intersection multiplicity. The shear is re-drawn
// deterministically whenever a genericity test fails; the Bezout identity
// deg(cycle) = deg(C1) * deg(C2) is checked before returning.
inline ZeroCycle intersection_cycle(const Curve& c1, const Curve& c2, const Shear& shear,
                                    IntersectionStats* stats = nullptr) {
  if (c1 == c2) throw value_error("intersection cycle needs distinct curves");
  if (stats) ++stats->calls;
  constexpr std::uint64_t max_attempts = 24;
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    Shear s = attempt == 0 ? shear : shear.retry(attempt);
    if (auto cycle = detail::try_intersection(c1, c2, s)) {
      if (cycle->degree() != c1.degree() * c2.degree())
        throw internal_error("intersection cycle violates the Bezout degree");
      if (stats) stats->retries += attempt;
      return *cycle;
    }
  }
  throw internal_error("no generic shear found for intersection");
}

// Bilinear extension of the intersection cycle to divisors, with the
// diagonal dropped: pairs sharing a component contribute nothing.
inline ZeroCycle sqcap(const Divisor& d, const Divisor& e, const Shear& shear,
                       IntersectionStats* stats = nullptr) {
  ZeroCycle total;
  for (const auto& [c1, m1] : d.components())
    for (const auto& [c2, m2] : e.components()) {
      if (c1 == c2) continue;
      total = total + (m1 * m2) * intersection_cycle(c1, c2, shear, stats);
    }
  return total;
}

namespace detail {

// Normal form of a polynomial in (u, v) modulo the triangular pair of a
// closed point: first reduce in v by q (monic in v), then in u by p.
inline Poly tower_reduce(Poly f, const ClosedPoint& pt) {
  const Poly& q = pt.q();
  Poly pu = qpoly_to_uv(pt.p(), 0);
  int dq = q.degree_in(1);
  int dp = pt.p().degree();
  while (!f.is_zero() && f.degree_in(1) >= dq) {
    int d = f.degree_in(1);
    Poly lead = coeff_of_power(f, 1, d);
    Poly mono = Poly::constant(uv_vars(), 1);
    Poly shiftv = Poly::variable(uv_vars(), 1);
    for (int i = 0; i < d - dq; ++i) mono *= shiftv;
    f -= lead * q * mono;
  }
  while (!f.is_zero() && f.degree_in(0) >= dp) {
    int d = f.degree_in(0);
    Poly lead = coeff_of_power(f, 0, d);
    Poly mono = Poly::constant(uv_vars(), 1);
    Poly shiftu = Poly::variable(uv_vars(), 0);
    for (int i = 0; i < d - dp; ++i) mono *= shiftu;
    f -= lead * pu * mono;
  }
  return f;
}

}  // namespace detail

// Incidence test: reduce the defining polynomial, written in the point's
// chart, modulo the point's triangular pair.
inline bool is_on_curve(const ClosedPoint& pt, const Curve& c) {
  Poly f = dehomogenize(c.poly(), pt.chart());
  if (pt.chart() == Chart::Z) f = f.with_vars(detail::uv_vars());
  return detail::tower_reduce(std::move(f), pt).is_zero();
}

// Whether an affine polynomial in (x, y) vanishes at an affine closed point.
inline bool vanishes_at_affine(const Poly& f, const ClosedPoint& pt) {
  if (pt.chart() != Chart::Z) throw value_error("affine evaluation needs an affine point");
  if (f.vars() != affine_vars()) throw value_error("affine evaluation expects x, y");
  return detail::tower_reduce(f.with_vars(detail::uv_vars()), pt).is_zero();
}

// Base locus of the rational map (x, y) -> (f, c) cut out by a nonconstant
// rational function: the common points of the zero and polar loci.
inline std::set<ClosedPoint> base_locus(const RationalFunction& f, const Shear& shear,
                                        IntersectionStats* stats = nullptr) {
  if (f.is_zero() || f.is_constant()) throw value_error("base locus needs a nonconstant function");
  auto [pos, neg] = pos_neg_parts(principal_divisor(f));
  std::set<ClosedPoint> locus;
  for (const auto& [c1, m1] : pos.components())
    for (const auto& [c2, m2] : neg.components()) {
      ZeroCycle z = intersection_cycle(c1, c2, shear, stats);
      for (const auto& [pt, m] : z.points()) locus.insert(pt);
    }
  return locus;
}

}  // namespace geom
}  // namespace symk2
