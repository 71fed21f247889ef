#include <catch2/catch_amalgamated.hpp>

#include "symk2/map.hpp"
#include "symk2/probe.hpp"
#include "symk2/tame.hpp"

using namespace symk2;

namespace {

RationalFunction rf_x() { return RationalFunction::x(); }
RationalFunction rf_y() { return RationalFunction::y(); }
RationalFunction rf_c(long long n, long long d = 1) {
  return RationalFunction::constant(Rat(n, d));
}

// Random polynomial in x, y of total degree <= maxdeg with small coefficients.
Poly random_poly(Rng& rng, int maxdeg) {
  Poly p(affine_vars());
  for (int i = 0; i <= maxdeg; ++i)
    for (int j = 0; i + j <= maxdeg; ++j)
      p.add_term({i, j}, Rat(rng.range(-2, 2)));
  return p;
}

Poly random_nonconstant_poly(Rng& rng, int maxdeg) {
  while (true) {
    Poly p = random_poly(rng, maxdeg);
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

ZeroCycle restrict_sum_affine(const TameElement& t) {
  ZeroCycle total;
  for (const auto& [c, z] : t.components()) total = total + z;
  return cycle_restrict_affine(total);
}

}  // namespace

TEST_CASE("alpha components of the coordinate pair") {
  Shear sh(3);
  Divisor d = principal_divisor(rf_x());
  Divisor e = principal_divisor(rf_y());

  ZeroCycle av = alpha_component(d, e, Curve::line_v(), sh);
  ZeroCycle expect_v;
  expect_v.add(ClosedPoint::origin(), 1);
  expect_v.add(ClosedPoint::inf_v(), -1);
  CHECK(av == expect_v);

  ZeroCycle ah = alpha_component(d, e, Curve::line_h(), sh);
  ZeroCycle expect_h;
  expect_h.add(ClosedPoint::origin(), -1);
  expect_h.add(ClosedPoint::inf_h(), 1);
  CHECK(ah == expect_h);

  SECTION("equal arguments give the zero cycle") {
    CHECK(alpha_component(d, d, Curve::line_v(), sh).is_zero());
  }
  SECTION("every alpha has degree zero") {
    CHECK(av.degree() == 0);
    CHECK(ah.degree() == 0);
  }
  SECTION("rejected inputs") {
    CHECK_THROWS_AS(alpha_component(d, e, Curve::line_inf(), sh), value_error);
    Divisor bad;
    bad.add(Curve::line_v(), 1);  // degree 1, not principal
    CHECK_THROWS_AS(alpha_component(bad, e, Curve::line_v(), sh), value_error);
  }
}

TEST_CASE("reference symbol") {
  Shear sh(5);
  IntersectionStats st;
  TameElement ref = reference_symbol(sh, &st);

  REQUIRE(ref.components().size() == 2);
  REQUIRE(ref.components().count(Curve::line_h()) == 1);
  REQUIRE(ref.components().count(Curve::line_v()) == 1);

  ZeroCycle on_h;
  on_h.add(ClosedPoint::origin(), -1);
  on_h.add(ClosedPoint::inf_h(), 1);
  CHECK(ref.component(Curve::line_h()) == on_h);

  ZeroCycle on_v;
  on_v.add(ClosedPoint::origin(), 1);
  on_v.add(ClosedPoint::inf_v(), -1);
  CHECK(ref.component(Curve::line_v()) == on_v);

  CHECK(equals(ref, tame_symbol(principal_divisor(rf_x()), principal_divisor(rf_y()), sh)));
}

TEST_CASE("tame symbol on hand-checked pairs") {
  Shear sh(7);

  SECTION("a function against itself vanishes") {
    Divisor d = principal_divisor(rf_x() + rf_y());
    CHECK(tame_symbol(d, d, sh).is_empty());
  }
  SECTION("f and 1-f annihilate each other") {
    RationalFunction f = rf_x() + rf_y();
    TameElement t = tame_symbol(principal_divisor(f), principal_divisor(rf_c(1) - f), sh);
    CHECK(t.is_empty());
  }
  SECTION("squaring one argument doubles the symbol") {
    TameElement ref = reference_symbol(sh);
    TameElement sq = tame_symbol(principal_divisor(rf_x() * rf_x()), principal_divisor(rf_y()), sh);
    CHECK(equals(sq, tame_scale(ref, 2)));
    CHECK(equals(sq, tame_add(ref, ref)));
  }
  SECTION("constants contribute nothing") {
    TameElement scaled =
        tame_symbol(principal_divisor(rf_c(3) * rf_x()), principal_divisor(rf_c(5, 2) * rf_y()), sh);
    CHECK(equals(scaled, reference_symbol(sh)));
  }
}

TEST_CASE("tame element arithmetic") {
  Shear sh(9);
  TameElement ref = reference_symbol(sh);

  CHECK(tame_add(ref, tame_negate(ref)).is_empty());
  CHECK(tame_scale(ref, 0).is_empty());
  CHECK(equals(tame_scale(ref, 3), tame_add(ref, tame_add(ref, ref))));
  CHECK(equals(ref, ref));
  CHECK_FALSE(equals(ref, tame_negate(ref)));

  SECTION("mixing shears is refused") {
    TameElement other = reference_symbol(Shear(10));
    CHECK_THROWS_AS(equals(ref, other), value_error);
    CHECK_THROWS_AS(tame_add(ref, other), value_error);
  }
  SECTION("components keyed by the boundary line are refused") {
    TameElement t;
    ZeroCycle z;
    z.add(ClosedPoint::origin(), 1);
    z.add(ClosedPoint::inf_h(), -1);
    CHECK_THROWS_AS(t.set_component(Curve::line_inf(), z), value_error);
  }
}

TEST_CASE("symbol-preservation verdicts on model maps") {
  Shear sh(13);
  IntersectionStats st;

  CHECK(preserves_k2(RationalMap::identity(), sh, &st));
  CHECK(preserves_k2(RationalMap(rf_x() * rf_y(), rf_y()), sh, &st));
  CHECK(preserves_k2(gen_torus(Rat(3), Rat(2)), sh, &st));
  CHECK_FALSE(preserves_k2(RationalMap(rf_x() * rf_x(), rf_y()), sh, &st));
  CHECK_FALSE(preserves_k2(RationalMap(rf_x() + rf_c(1), rf_y()), sh, &st));
  // coordinate swap negates the symbol
  CHECK_FALSE(preserves_k2(RationalMap(rf_y(), rf_x()), sh, &st));
  // inversion in both coordinates preserves it
  CHECK(preserves_k2(RationalMap(rf_x().inverse(), rf_y().inverse()), sh, &st));
}

TEST_CASE("Steinberg relation on random functions") {
  Shear sh(17);
  Rng rng(2024);
  int done = 0;
  while (done < 8) {
    Poly f = random_nonconstant_poly(rng, 3);
    RationalFunction rf = RationalFunction::from_poly(f);
    RationalFunction one_minus = rf_c(1) - rf;
    if (one_minus.is_zero() || one_minus.is_constant()) continue;
    CAPTURE(rf.str());
    TameElement t = tame_symbol(principal_divisor(rf), principal_divisor(one_minus), sh);
    CHECK(t.is_empty());
    ++done;
  }
  SECTION("also with denominators") {
    RationalFunction f(affine_x(), affine_y());
    TameElement t = tame_symbol(principal_divisor(f), principal_divisor(rf_c(1) - f), sh);
    CHECK(t.is_empty());
  }
}

TEST_CASE("global reciprocity: components sum to zero on the affine chart") {
  Shear sh(19);
  Rng rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    RationalFunction f = random_nonconstant_rf(rng, 2);
    RationalFunction g = random_nonconstant_rf(rng, 2);
    CAPTURE(f.str(), g.str());
    TameElement t = tame_symbol(principal_divisor(f), principal_divisor(g), sh);
    CHECK(restrict_sum_affine(t).is_zero());
    for (const auto& [c, z] : t.components()) CHECK(z.degree() == 0);
  }
}

TEST_CASE("bilinearity and antisymmetry") {
  Shear sh(23);
  Rng rng(555);
  for (int trial = 0; trial < 4; ++trial) {
    RationalFunction f = random_nonconstant_rf(rng, 2);
    RationalFunction g = random_nonconstant_rf(rng, 2);
    RationalFunction h = random_nonconstant_rf(rng, 2);
    if ((f * h).is_constant()) continue;
    CAPTURE(f.str(), g.str(), h.str());
    Divisor df = principal_divisor(f), dg = principal_divisor(g), dh = principal_divisor(h);
    TameElement lhs = tame_symbol(principal_divisor(f * h), dg, sh);
    TameElement rhs = tame_add(tame_symbol(df, dg, sh), tame_symbol(dh, dg, sh));
    CHECK(equals(lhs, rhs));
    CHECK(equals(tame_symbol(df, dg, sh), tame_negate(tame_symbol(dg, df, sh))));
  }
}
