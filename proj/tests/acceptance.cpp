// Acceptance gate: one pass/fail line per criterion, plain exit status.
#include <array>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "symk2/analysis.hpp"
#include "symk2/probe.hpp"
#include "symk2/tame.hpp"

using namespace symk2;

namespace {

int failures = 0;
std::map<int, std::string> lines;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion(int n, const std::string& name, bool ok) {
  lines[n] = std::string(ok ? "PASS" : "FAIL") + "  criterion " + std::to_string(n) + ": " + name;
  if (!ok) ++failures;
}

Poly random_affine_poly(Rng& rng, int maxdeg) {
  Poly p(affine_vars());
  for (int i = 0; i <= maxdeg; ++i)
    for (int j = 0; i + j <= maxdeg; ++j) p.add_term({i, j}, Rat(rng.range(-2, 2)));
  return p;
}

Poly random_nonconstant_poly(Rng& rng, int maxdeg) {
  while (true) {
    Poly p = random_affine_poly(rng, maxdeg);
    if (!p.is_constant()) return p;
  }
}

RationalFunction random_nonconstant_rf(Rng& rng, int maxdeg) {
  while (true) {
    Poly num = random_nonconstant_poly(rng, maxdeg);
    Poly den = rng.chance(0.3) ? random_nonconstant_poly(rng, maxdeg) : affine_const(1);
    RationalFunction f(num, den);
    if (!f.is_constant() && !f.is_zero()) return f;
  }
}

Poly random_homogeneous(Rng& rng, int d) {
  Poly p(projective_vars());
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) p.add_term({i, j, d - i - j}, Rat(rng.range(-3, 3)));
  return p;
}

Curve random_curve(Rng& rng, int d) {
  while (true) {
    Poly p = random_homogeneous(rng, d);
    if (p.is_zero() || p.total_degree() != d) continue;
    if (is_irreducible(p)) return Curve::trusted(p);
  }
}

// Redraw targets until the fiber is clean, then report its count.
int clean_fiber_count(const RationalMap& m, Rng& rng, const Shear& sh) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rat a(rng.range(-19, 19), rng.range(1, 4));
    Rat b(rng.range(-19, 19), rng.range(1, 4));
    FiberReport r = fiber_count(m, a, b, sh);
    if (!r.flags.needs_redraw()) return r.count;
  }
  throw internal_error("no clean fiber target found");
}

}  // namespace

int main() {
  std::cout << std::fixed << std::setprecision(2);
  Shear sh(2026);

  // 1: the symbol of the coordinate pair
  try {
    auto t0 = std::chrono::steady_clock::now();
    TameElement ref = reference_symbol(sh);
    double dt = seconds_since(t0);
    ZeroCycle on_h, on_v;
    on_h.add(ClosedPoint::origin(), -1);
    on_h.add(ClosedPoint::inf_h(), 1);
    on_v.add(ClosedPoint::origin(), 1);
    on_v.add(ClosedPoint::inf_v(), -1);
    bool ok = ref.components().size() == 2 && ref.component(Curve::line_h()) == on_h &&
              ref.component(Curve::line_v()) == on_v && dt < 1.0;
    criterion(1, "reference symbol is -0+inf_h on l_h, 0-inf_v on l_v", ok);
  } catch (const std::exception& e) {
    criterion(1, std::string("reference symbol (exception: ") + e.what() + ")", false);
  }

  // 2: both checkers agree on a labeled corpus; 7: divisor-shape conclusion
  try {
    auto t0 = std::chrono::steady_clock::now();
    auto corpus = gen_corpus(424242, 100, 6);
    int labeled_true = 0, labeled_false = 0, agreements = 0;
    bool degrees_ok = true;
    int prop_violations = 0;
    for (const auto& e : corpus) {
      (e.expected_symplectic ? labeled_true : labeled_false)++;
      if (e.map.degree() > 6) degrees_ok = false;
      bool form = is_symplectic_form(e.map).preserves();
      bool k2 = preserves_k2(e.map, sh);
      if (form == k2 && form == e.expected_symplectic) ++agreements;
      Prop6Report rep = prop6_verify(e.map, sh);
      if (rep.hypotheses.all() && !rep.conclusion_holds) ++prop_violations;
    }
    double dt = seconds_since(t0);
    bool ok2 = corpus.size() >= 100 && labeled_true >= 40 && labeled_false >= 40 &&
               degrees_ok && agreements == static_cast<int>(corpus.size()) && dt < 600.0;
    criterion(2, "form and symbol checkers agree on 100 labeled maps", ok2);

    Rng rng7(777);
    bool torus_ok = true;
    for (int i = 0; i < 5; ++i) {
      RationalMap t = gen_torus(rng7.nonzero_rational(9, 3), rng7.nonzero_rational(9, 3));
      Prop6Report rep = prop6_verify(t, sh);
      if (!rep.hypotheses.all() || !rep.conclusion_holds || !rep.torus_swap_form)
        torus_ok = false;
      if (clean_fiber_count(t, rng7, sh) != 1) torus_ok = false;
    }
    criterion(7, "divisor shapes collapse whenever all hypotheses hold",
              prop_violations == 0 && torus_ok);
  } catch (const std::exception& e) {
    criterion(2, std::string("corpus cross-check (exception: ") + e.what() + ")", false);
    criterion(7, "divisor-shape conclusion (skipped: corpus failed)", false);
  }

  // 3: f and 1-f annihilate
  try {
    Rng rng(33);
    bool ok = true;
    for (int i = 0; i < 25; ++i) {
      RationalFunction f = RationalFunction::from_poly(random_nonconstant_poly(rng, 3));
      RationalFunction om = RationalFunction::constant(Rat(1)) - f;
      if (!tame_symbol(principal_divisor(f), principal_divisor(om), sh).is_empty()) ok = false;
    }
    criterion(3, "25 random pairs (f, 1-f) produce the empty element", ok);
  } catch (const std::exception& e) {
    criterion(3, std::string("(f, 1-f) pairs (exception: ") + e.what() + ")", false);
  }

  // 4: residues cancel on the affine chart and balance on each curve
  try {
    Rng rng(44);
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
      RationalFunction f = random_nonconstant_rf(rng, i % 2 == 0 ? 2 : 3);
      RationalFunction g = random_nonconstant_rf(rng, 2);
      TameElement t = tame_symbol(principal_divisor(f), principal_divisor(g), sh);
      ZeroCycle total;
      for (const auto& [c, z] : t.components()) {
        total = total + z;
        if (z.degree() != 0) ok = false;
      }
      if (!cycle_restrict_affine(total).is_zero()) ok = false;
    }
    criterion(4, "50 random pairs: affine residues cancel, all components degree 0", ok);
  } catch (const std::exception& e) {
    criterion(4, std::string("residue cancellation (exception: ") + e.what() + ")", false);
  }

  // 5: bilinearity and antisymmetry
  try {
    Rng rng(55);
    bool ok = true;
    for (int i = 0; i < 25; ++i) {
      RationalFunction f = random_nonconstant_rf(rng, 2);
      RationalFunction g = random_nonconstant_rf(rng, 2);
      RationalFunction h = random_nonconstant_rf(rng, 2);
      Divisor df = principal_divisor(f), dg = principal_divisor(g), dh = principal_divisor(h);
      TameElement lhs = tame_symbol(principal_divisor(f * h), dg, sh);
      TameElement rhs = tame_add(tame_symbol(df, dg, sh), tame_symbol(dh, dg, sh));
      if (!equals(lhs, rhs)) ok = false;
      if (!equals(tame_symbol(df, dg, sh), tame_negate(tame_symbol(dg, df, sh)))) ok = false;
    }
    criterion(5, "25 random triples: bilinear in each slot, antisymmetric", ok);
  } catch (const std::exception& e) {
    criterion(5, std::string("bilinearity (exception: ") + e.what() + ")", false);
  }

  // 6: intersection degrees multiply
  try {
    Rng rng(66);
    IntersectionStats st;
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
      int da = 1 + static_cast<int>(rng.range(0, 4));
      int db = 1 + static_cast<int>(rng.range(0, i % 10 == 0 ? 4 : 2));
      Curve a = random_curve(rng, da);
      Curve b = random_curve(rng, db);
      if (a == b) {
        --i;
        continue;
      }
      ZeroCycle z = intersection_cycle(a, b, sh, &st);
      if (z.degree() != da * db) ok = false;
    }
    bool retries_ok = st.retries <= 3 * st.calls;
    criterion(6, "100 random curve pairs: cycle degree = product of degrees", ok && retries_ok);
  } catch (const std::exception& e) {
    criterion(6, std::string("intersection degrees (exception: ") + e.what() + ")", false);
  }

  // 8: fiber counts against closed forms
  try {
    Rng rng(88);
    RationalFunction x = RationalFunction::x(), y = RationalFunction::y();
    bool ok = true;
    RationalMap squaring(x * x, y);
    RationalMap shearing(x * y, y);
    for (int i = 0; i < 5; ++i) {
      if (clean_fiber_count(squaring, rng, sh) != 2) ok = false;
      if (clean_fiber_count(shearing, rng, sh) != 1) ok = false;
    }
    const std::array<std::array<std::array<int, 2>, 2>, 6> mats{{
        {{{2, 0}, {0, 1}}}, {{{2, 1}, {1, 1}}}, {{{3, 1}, {1, 1}}},
        {{{1, 2}, {2, 1}}}, {{{2, 1}, {1, 2}}}, {{{0, 1}, {-1, 0}}},
    }};
    for (const auto& m : mats) {
      int want = std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
      RationalMap mm = gen_monomial(m);
      for (int i = 0; i < 5; ++i)
        if (clean_fiber_count(mm, rng, sh) != want) ok = false;
    }
    criterion(8, "fiber counts: 2 for squaring, 1 for shearing, |det| for monomials", ok);
  } catch (const std::exception& e) {
    criterion(8, std::string("fiber counts (exception: ") + e.what() + ")", false);
  }

  // 9: factorization round-trip
  try {
    Rng rng(99);
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
      int nfac = 1 + static_cast<int>(rng.range(0, 2));
      std::map<Poly, int> want;
      Poly prod = Poly::constant(projective_vars(), Rat(rng.nonzero(5), rng.range(1, 3)));
      for (int k = 0; k < nfac; ++k) {
        Curve c = random_curve(rng, 1 + static_cast<int>(rng.range(0, 3)));
        want[c.poly()] += 1;
        prod = prod * c.poly();
      }
      Factorization f = factor(prod);
      std::map<Poly, int> got;
      for (const auto& part : f.factors) got[part.factor] += part.multiplicity;
      if (got != want) ok = false;
    }
    criterion(9, "100 random products of irreducibles re-factor to the same multiset", ok);
  } catch (const std::exception& e) {
    criterion(9, std::string("factorization round-trip (exception: ") + e.what() + ")", false);
  }

  for (const auto& [n, line] : lines) std::cout << line << "\n";
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
