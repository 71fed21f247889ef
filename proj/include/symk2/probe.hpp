#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "symk2/cycle.hpp"
#include "symk2/divisor.hpp"
#include "symk2/error.hpp"
#include "symk2/factor.hpp"
#include "symk2/intersect.hpp"
#include "symk2/map.hpp"
#include "symk2/rng.hpp"
#include "symk2/shear.hpp"
#include "symk2/tame.hpp"

namespace symk2 {
inline namespace symplectic {

// ---- corpus -------------------------------------------------------------------

struct CorpusEntry {
  RationalMap map;
  bool expected_symplectic;
};

namespace detail {

inline RationalMap random_symplectic_generator(Rng& rng, int budget) {
  switch (rng.range(0, budget >= 3 ? 3 : 2)) {
    case 0:
      return gen_torus(rng.nonzero_rational(3, 2), rng.nonzero_rational(3, 2));
    case 1: {  // unipotent exponent matrix, det 1
      int k = static_cast<int>(rng.nonzero(budget >= 3 ? 2 : 1));
      if (rng.chance(0.5)) return gen_monomial({{{1, k}, {0, 1}}});
      return gen_monomial({{{1, 0}, {k, 1}}});
    }
    case 2: {  // multiplier in one variable, degree within budget
      std::size_t var = rng.chance(0.5) ? 0 : 1;
      int deg = static_cast<int>(rng.range(1, std::max(1, budget - 1)));
      Poly p(affine_vars());
      Exponents e(2, 0);
      e[var] = deg;
      p.add_term(e, Rat(rng.nonzero(3)));
      for (int k = 0; k < deg; ++k) {
        e[var] = k;
        p.add_term(e, Rat(rng.range(-2, 2)));
      }
      RationalFunction mult = RationalFunction::from_poly(p);
      if (rng.chance(0.3)) mult = mult.inverse();
      return gen_elementary(mult, var == 0 ? Axis::Vertical : Axis::Horizontal);
    }
    default:  // rotation-like exponent matrix, det 1
      return gen_monomial({{{0, 1}, {-1, 0}}});
  }
}

// Composition of generators, never exceeding the degree budget.
inline RationalMap random_symplectic_word(Rng& rng, int max_degree) {
  RationalMap m = random_symplectic_generator(rng, max_degree);
  if (m.degree() > max_degree) m = RationalMap::identity();
  long long extra = rng.range(0, 3);
  for (long long i = 0; i < extra; ++i) {
    RationalMap next = random_symplectic_generator(rng, max_degree);
    RationalMap candidate = compose(m, next);
    if (candidate.degree() > max_degree) break;
    m = candidate;
  }
  return m;
}

inline RationalMap random_perturbation(Rng& rng, int budget) {
  if (budget >= 2 && rng.chance(0.5)) {
    // monomial factor with determinant != 1
    int d = budget >= 3 && rng.chance(0.4) ? 3 : 2;
    if (rng.chance(0.25)) d = -1;
    if (rng.chance(0.5)) return gen_monomial({{{d, 0}, {0, 1}}});
    return gen_monomial({{{1, 0}, {0, d}}});
  }
  // translated coordinate
  Rat c(rng.nonzero(3));
  if (rng.chance(0.5))
    return RationalMap(RationalFunction(affine_x() + affine_const(c), affine_const(1)),
                       RationalFunction::y());
  return RationalMap(RationalFunction::x(),
                     RationalFunction(affine_y() + affine_const(c), affine_const(1)));
}

// A symplectic word with exactly one non-symplectic factor inside.
inline RationalMap random_perturbed_word(Rng& rng, int max_degree) {
  RationalMap m = random_perturbation(rng, max_degree);
  for (int side = 0; side < 2; ++side) {
    RationalMap word = random_symplectic_word(rng, max_degree);
    RationalMap candidate = side == 0 ? compose(word, m) : compose(m, word);
    if (candidate.degree() <= max_degree) m = candidate;
  }
  return m;
}

}  // namespace detail

// Deterministic mixture of form-preserving words (even indices) and words
// carrying exactly one non-preserving factor (odd indices). Every label is
// re-verified against the Jacobian ratio before the entry is returned.
inline std::vector<CorpusEntry> gen_corpus(std::uint64_t seed, int count, int max_degree) {
  if (count < 0) throw value_error("corpus size cannot be negative");
  if (max_degree < 2) throw value_error("corpus needs max_degree >= 2");
  Rng rng(Rng::mix(seed, 0x434f5250ull));
  std::vector<CorpusEntry> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    bool want = i % 2 == 0;
    RationalMap m = want ? detail::random_symplectic_word(rng, max_degree)
                         : detail::random_perturbed_word(rng, max_degree);
    if (log_jacobian_ratio(m).is_one() != want)
      throw internal_error("corpus label disagrees with the Jacobian ratio");
    out.push_back({std::move(m), want});
  }
  return out;
}

// ---- fibers -------------------------------------------------------------------

struct FiberFlags {
  bool removed_component = false;  // the two fiber equations shared a curve
  bool nonreduced = false;         // some fiber point has multiplicity > 1
  bool needs_redraw() const { return removed_component || nonreduced; }
};

struct FiberReport {
  int count = 0;  // number of geometric points (sum of residue degrees)
  FiberFlags flags;
};

// Number of geometric points in the affine fiber f = a, g = b, after removing
// shared components and points where a denominator vanishes. Degenerate
// targets are reported through the flags so that callers can redraw.
inline FiberReport fiber_count(const RationalMap& m, const Rat& a, const Rat& b,
                               const Shear& shear, IntersectionStats* stats = nullptr) {
  Poly fa = m.f().num() - affine_const(a) * m.f().den();
  Poly gb = m.g().num() - affine_const(b) * m.g().den();
  if (fa.is_zero() || gb.is_zero())
    throw value_error("fiber system is not zero-dimensional");

  FiberReport rep;
  Poly h = poly_gcd(fa, gb);
  if (!h.is_one()) {
    rep.flags.removed_component = true;
    fa = exact_divide(fa, h);
    gb = exact_divide(gb, h);
  }
  if (fa.is_constant() || gb.is_constant()) return rep;  // empty fiber

  Factorization ff = factor(homogenize(fa));
  Factorization gf = factor(homogenize(gb));
  ZeroCycle total;
  for (const auto& fi : ff.factors)
    for (const auto& gj : gf.factors) {
      Curve ci = Curve::trusted(fi.factor), cj = Curve::trusted(gj.factor);
      if (ci == cj) throw internal_error("fiber equations share a curve after cleanup");
      total = total + (fi.multiplicity * gj.multiplicity) * intersection_cycle(ci, cj, shear, stats);
    }

  ZeroCycle affine = cycle_restrict_affine(total);
  for (const auto& [pt, mult] : affine.points()) {
    if (vanishes_at_affine(m.f().den(), pt) || vanishes_at_affine(m.g().den(), pt))
      continue;  // the map is undefined here; a base-locus artifact
    if (mult > 1) rep.flags.nonreduced = true;
    rep.count += pt.degree();
  }
  return rep;
}

// ---- the central cross-check ----------------------------------------------------

// Whether the differential-form checker and the symbol checker agree on the
// map. Any false return exposes a bug in one of the two.
inline bool theorem1_crosscheck(const RationalMap& m, const Shear& shear,
                                IntersectionStats* stats = nullptr) {
  bool form = is_symplectic_form(m).preserves();
  bool k2 = preserves_k2(m, shear, stats);
  return form == k2;
}

}  // namespace symplectic
}  // namespace symk2
