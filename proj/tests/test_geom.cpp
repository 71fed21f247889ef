#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "symk2/curve.hpp"
#include "symk2/cycle.hpp"
#include "symk2/divisor.hpp"
#include "symk2/intersect.hpp"
#include "symk2/point.hpp"
#include "symk2/poly.hpp"
#include "symk2/ratfunc.hpp"
#include "symk2/rng.hpp"
#include "symk2/shear.hpp"

using namespace symk2;

namespace {

Poly X() { return proj_X(); }
Poly Y() { return proj_Y(); }
Poly Z() { return proj_Z(); }
Poly x() { return affine_x(); }
Poly y() { return affine_y(); }
Poly ac(const Rat& c) { return affine_const(c); }

RationalFunction rf(const Poly& n, const Poly& d) { return RationalFunction(n, d); }
RationalFunction rf(const Poly& n) { return RationalFunction::from_poly(n); }

ZeroCycle single(const ClosedPoint& p, int m = 1) {
  ZeroCycle z;
  z.add(p, m);
  return z;
}

// Random irreducible homogeneous curve of exact degree d with small
// coefficients.
Curve random_curve(Rng& rng, int d) {
  for (;;) {
    Poly p(projective_vars());
    for (int i = 0; i + 0 <= d; ++i)
      for (int j = 0; i + j <= d; ++j) p.add_term({i, j, d - i - j}, Rat(rng.range(-3, 3)));
    if (p.is_zero() || p.total_degree() != d) continue;
    if (!is_irreducible(p)) continue;
    return Curve(p);
  }
}

}  // namespace

TEST_CASE("rational function reduction and arithmetic") {
  RationalFunction f((x() * x() - ac(1)) * y(), x() - ac(1));
  CHECK(f.num() == (x() + ac(1)) * y());
  CHECK(f.den() == ac(1));

  // denominator is primitive with positive sign; units move to the numerator
  RationalFunction g(x(), ac(-2) * y());
  CHECK(g.den() == y());
  CHECK(g.num() == x() * Rat(-1, 2));

  RationalFunction xx = RationalFunction::x(), yy = RationalFunction::y();
  CHECK((xx / yy) * (yy / xx) == RationalFunction::constant(1));
  CHECK((xx / yy).derivative(1) == RationalFunction(-x(), y() * y()));
  CHECK((xx + yy) - yy == xx);
  CHECK_THROWS_AS(RationalFunction(x(), affine_poly()), value_error);
  CHECK_THROWS_AS(xx / RationalFunction::constant(0), value_error);

  // composition by substitution
  RationalFunction comp = (xx / yy).substitute(xx * yy, yy);
  CHECK(comp == xx);

  CHECK((xx * yy).evaluate(2, 3) == Rat(6));
  CHECK_FALSE((xx / yy).evaluate(1, 0).has_value());
}

TEST_CASE("curve construction and canonical form") {
  CHECK(Curve(X() * 2) == Curve(X()));
  CHECK(Curve(-X()) == Curve(X()));
  CHECK(Curve::line_h().poly() == Y());
  CHECK(Curve::line_v().poly() == X());
  CHECK(Curve::line_inf().poly() == Z());
  CHECK(Curve::line_h().degree() == 1);
  CHECK(Curve(X() * Y() - Z() * Z()).degree() == 2);

  CHECK_THROWS_AS(Curve(X() * Y()), value_error);             // reducible
  CHECK_THROWS_AS(Curve(X() * X() + Z()), value_error);       // not homogeneous
  CHECK_THROWS_AS(Curve(Poly::constant(projective_vars(), 3)), value_error);
  CHECK_THROWS_AS(Curve(x() + y()), value_error);             // wrong variables
}

TEST_CASE("principal divisors of coordinates and units") {
  Divisor dx = principal_divisor(rf(x()));
  CHECK(dx.coefficient(Curve::line_v()) == 1);
  CHECK(dx.coefficient(Curve::line_inf()) == -1);
  CHECK(dx.components().size() == 2);

  CHECK(principal_divisor(RationalFunction::constant(5)).is_zero());
  CHECK(principal_divisor(rf(ac(-7), ac(3))).is_zero());

  Divisor d = principal_divisor(rf(y() * (ac(1) + x())));
  CHECK(d.coefficient(Curve::line_h()) == 1);
  CHECK(d.coefficient(Curve(X() + Z())) == 1);
  CHECK(d.coefficient(Curve::line_inf()) == -2);
  CHECK(d.components().size() == 3);

  CHECK_THROWS_AS(principal_divisor(RationalFunction::constant(0)), value_error);
}

TEST_CASE("principal divisors have degree zero and are multiplicative") {
  Rng rng(2024);
  int done = 0;
  for (int i = 0; i < 200 && done < 20; ++i) {
    Poly n(affine_vars()), d(affine_vars());
    for (int t = 0; t < 4; ++t) {
      n.add_term({static_cast<int>(rng.range(0, 2)), static_cast<int>(rng.range(0, 2))},
                 Rat(rng.range(-3, 3)));
      d.add_term({static_cast<int>(rng.range(0, 2)), static_cast<int>(rng.range(0, 2))},
                 Rat(rng.range(-3, 3)));
    }
    if (n.is_zero() || d.is_zero()) continue;
    RationalFunction f(n, d);
    if (f.is_zero()) continue;
    Poly m(affine_vars());
    m.add_term({1, static_cast<int>(rng.range(0, 2))}, Rat(rng.range(1, 3)));
    m.add_term({0, 0}, Rat(rng.range(-2, 2)));
    RationalFunction g = rf(m);

    Divisor df = principal_divisor(f), dg = principal_divisor(g);
    CHECK(df.degree() == 0);
    CHECK(principal_divisor(f * g) == df + dg);
    CHECK(principal_divisor(f / g) == df - dg);
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("valuation and positive and negative parts") {
  Divisor d = principal_divisor(rf(x() * x(), y()));
  CHECK(valuation(d, Curve::line_v()) == 2);
  CHECK(valuation(d, Curve::line_h()) == -1);
  CHECK(valuation(d, Curve::line_inf()) == -1);
  CHECK(valuation(d, Curve(X() + Z())) == 0);

  auto [pos, neg] = pos_neg_parts(d);
  CHECK(pos.coefficient(Curve::line_v()) == 2);
  CHECK(pos.components().size() == 1);
  CHECK(neg.coefficient(Curve::line_h()) == 1);
  CHECK(neg.coefficient(Curve::line_inf()) == 1);
  CHECK(neg.components().size() == 2);
  CHECK(d == pos - neg);
}

TEST_CASE("closed point construction and ordering") {
  ClosedPoint o = ClosedPoint::origin();
  CHECK(o.chart() == Chart::Z);
  CHECK(o.degree() == 1);
  CHECK(o.is_rational());
  CHECK(o.str() == "[0:0:1]");
  CHECK(ClosedPoint::inf_h().str() == "[1:0:0]");
  CHECK(ClosedPoint::inf_v().str() == "[0:1:0]");
  CHECK(ClosedPoint::inf_h().chart() == Chart::X);
  CHECK(ClosedPoint::inf_v().chart() == Chart::Y);

  CHECK(ClosedPoint::rational_projective(2, 4, 2) ==
        ClosedPoint::rational_affine(Chart::Z, 1, 2));
  auto v = ClosedPoint::rational_projective(-2, 4, -2).proj_coords();
  CHECK(v == std::array<Rat, 3>{1, -2, 1});
  auto w = ClosedPoint::rational_affine(Chart::Z, Rat(-1, 2), Rat(3)).proj_coords();
  CHECK(w == std::array<Rat, 3>{1, -6, -2});

  CHECK_THROWS_AS(ClosedPoint::rational_projective(0, 0, 0), value_error);
  CHECK(o < ClosedPoint::inf_h());
  CHECK(ClosedPoint::inf_h() < ClosedPoint::inf_v());
}

TEST_CASE("triangular canonicalization over number fields") {
  NumberField k2(QPoly({Rat(-2), Rat(0), Rat(1)}));  // u^2 - 2

  // primitive abscissa: p keeps the full modulus
  ClosedPoint a = ClosedPoint::from_affine_field(Chart::Z, k2, QPoly::t(),
                                                 QPoly({Rat(1), Rat(1)}));
  CHECK(a.degree() == 2);
  CHECK(a.p() == k2.modulus);
  Poly qa(std::vector<std::string>{"u", "v"});
  qa.add_term({0, 1}, 1);
  qa.add_term({1, 0}, -1);
  qa.add_term({0, 0}, -1);
  CHECK(a.q() == qa);  // v - u - 1

  // rational abscissa, quadratic ordinate: the degree moves into q
  ClosedPoint b = ClosedPoint::from_affine_field(Chart::Z, k2, QPoly::constant(1), QPoly::t());
  CHECK(b.degree() == 2);
  CHECK(b.p() == QPoly({Rat(-1), Rat(1)}));
  Poly qb(std::vector<std::string>{"u", "v"});
  qb.add_term({0, 2}, 1);
  qb.add_term({0, 0}, -2);
  CHECK(b.q() == qb);  // v^2 - 2

  // non-primitive element inside a degree four field
  NumberField k4(QPoly({Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)}));  // u^4 - 10u^2 + 1
  QPoly usq({Rat(0), Rat(0), Rat(1)});
  ClosedPoint c = ClosedPoint::from_affine_field(Chart::Z, k4, usq, QPoly::constant(0));
  CHECK(c.degree() == 2);
  CHECK(c.p() == QPoly({Rat(1), Rat(-10), Rat(1)}));  // minpoly of u^2

  // projective selection honours the chart priority
  ClosedPoint d = ClosedPoint::from_projective_field(k2, QPoly::constant(1), QPoly::t(),
                                                     QPoly::constant(0));
  CHECK(d.chart() == Chart::X);
  CHECK(d.degree() == 2);
}

TEST_CASE("intersections of the coordinate lines") {
  Shear s(11);
  CHECK(intersection_cycle(Curve::line_h(), Curve::line_v(), s) == single(ClosedPoint::origin()));
  CHECK(intersection_cycle(Curve::line_h(), Curve::line_inf(), s) ==
        single(ClosedPoint::inf_h()));
  CHECK(intersection_cycle(Curve::line_v(), Curve::line_inf(), s) ==
        single(ClosedPoint::inf_v()));
  CHECK_THROWS_AS(intersection_cycle(Curve::line_h(), Curve::line_h(), s), value_error);
}

TEST_CASE("intersection cycles of conics and cubics with lines") {
  Shear s(11);

  ZeroCycle hyp = intersection_cycle(Curve(X() * Y() - Z() * Z()), Curve::line_inf(), s);
  ZeroCycle hyp_expected = single(ClosedPoint::inf_h()) + single(ClosedPoint::inf_v());
  CHECK(hyp == hyp_expected);

  // tangent line of the parabola at the origin
  ZeroCycle par = intersection_cycle(Curve(Z() * Y() - X() * X()), Curve::line_h(), s);
  CHECK(par == single(ClosedPoint::origin(), 2));

  // cuspidal cubic against its cuspidal tangent
  ZeroCycle cusp =
      intersection_cycle(Curve(Z() * Y() * Y() - X() * X() * X()), Curve::line_h(), s);
  CHECK(cusp == single(ClosedPoint::origin(), 3));

  // nodal cubic against a branch through the node
  ZeroCycle node = intersection_cycle(
      Curve(Z() * Y() * Y() - X() * X() * X() - X() * X() * Z()), Curve::line_v(), s);
  CHECK(node == single(ClosedPoint::origin(), 2) + single(ClosedPoint::inf_v()));
}

TEST_CASE("irrational intersection points are canonicalized") {
  Shear s(11);
  NumberField k2(QPoly({Rat(-2), Rat(0), Rat(1)}));

  ZeroCycle z = intersection_cycle(Curve(Z() * Y() - X() * X()), Curve(Y() - Z() * 2), s);
  ClosedPoint expected =
      ClosedPoint::from_affine_field(Chart::Z, k2, QPoly::t(), QPoly::constant(2));
  CHECK(z == single(expected));
  CHECK(z.degree() == 2);

  Curve c1(X() * Y() - Z() * Z()), c2(X() * X() - Y() * Z());
  ZeroCycle conics = intersection_cycle(c1, c2, s);
  CHECK(conics.degree() == 4);
  CHECK(conics.coefficient(ClosedPoint::inf_v()) == 1);
  CHECK(conics.coefficient(ClosedPoint::rational_projective(1, 1, 1)) == 1);
  for (const auto& [pt, m] : conics.points()) {
    CHECK(is_on_curve(pt, c1));
    CHECK(is_on_curve(pt, c2));
  }
}

TEST_CASE("incidence test distinguishes points") {
  CHECK(is_on_curve(ClosedPoint::origin(), Curve::line_h()));
  CHECK(is_on_curve(ClosedPoint::origin(), Curve::line_v()));
  CHECK_FALSE(is_on_curve(ClosedPoint::origin(), Curve::line_inf()));
  CHECK(is_on_curve(ClosedPoint::inf_h(), Curve::line_inf()));
  CHECK_FALSE(is_on_curve(ClosedPoint::rational_projective(1, 1, 1), Curve::line_h()));
  CHECK(is_on_curve(ClosedPoint::rational_projective(1, 1, 1), Curve(X() * Y() - Z() * Z())));
}

TEST_CASE("divisor pairing drops shared components") {
  Shear s(11);
  Divisor d1, d2;
  d1.add(Curve::line_h(), 1);
  d1.add(Curve::line_v(), 1);
  d2.add(Curve::line_h(), 1);
  d2.add(Curve::line_inf(), -1);

  ZeroCycle z = sqcap(d1, d2, s);
  ZeroCycle expected = single(ClosedPoint::origin()) - single(ClosedPoint::inf_h()) -
                       single(ClosedPoint::inf_v());
  CHECK(z == expected);

  Divisor h;
  h.add(Curve::line_h(), 1);
  CHECK(sqcap(h, h, s).is_zero());

  Divisor h2, v1;
  h2.add(Curve::line_h(), 2);
  v1.add(Curve::line_v(), 1);
  CHECK(sqcap(h2, v1, s) == single(ClosedPoint::origin(), 2));
}

TEST_CASE("affine restriction drops the line at infinity") {
  Shear s(11);
  ZeroCycle at_inf = intersection_cycle(Curve(X() * Y() - Z() * Z()), Curve::line_inf(), s);
  CHECK(cycle_restrict_affine(at_inf).is_zero());

  ZeroCycle mixed = single(ClosedPoint::origin()) - single(ClosedPoint::inf_h());
  CHECK(cycle_restrict_affine(mixed) == single(ClosedPoint::origin()));
}

TEST_CASE("base loci of simple functions") {
  Shear s(11);
  CHECK(base_locus(RationalFunction::x(), s) == std::set<ClosedPoint>{ClosedPoint::inf_v()});
  CHECK(base_locus(RationalFunction::x() / RationalFunction::y(), s) ==
        std::set<ClosedPoint>{ClosedPoint::origin()});
  CHECK(base_locus(rf(x() + ac(1)), s) == std::set<ClosedPoint>{ClosedPoint::inf_v()});
  CHECK_THROWS_AS(base_locus(RationalFunction::constant(3), s), value_error);
}

TEST_CASE("zero cycle arithmetic and degrees") {
  ZeroCycle z;
  z.add(ClosedPoint::origin(), 2);
  z.add(ClosedPoint::inf_h(), -1);
  CHECK(z.degree() == 1);
  z.add(ClosedPoint::origin(), -2);
  CHECK(z.points().size() == 1);
  CHECK((z + (-z)).is_zero());
  CHECK((3 * z).coefficient(ClosedPoint::inf_h()) == -3);

  NumberField k2(QPoly({Rat(-2), Rat(0), Rat(1)}));
  ClosedPoint quad =
      ClosedPoint::from_affine_field(Chart::Z, k2, QPoly::t(), QPoly::constant(0));
  ZeroCycle w = single(quad, 3);
  CHECK(w.degree() == 6);
}

TEST_CASE("random curve pairs satisfy Bezout, symmetry and shear invariance") {
  Rng rng(501);
  Shear s1(1), s2(987654321);
  IntersectionStats stats;
  for (int trial = 0; trial < 12; ++trial) {
    int da = 1 + static_cast<int>(rng.range(0, 2));
    int db = 1 + static_cast<int>(rng.range(0, 2));
    Curve a = random_curve(rng, da), b = random_curve(rng, db);
    if (a == b) continue;

    ZeroCycle z = intersection_cycle(a, b, s1, &stats);
    CHECK(z.degree() == a.degree() * b.degree());
    for (const auto& [pt, m] : z.points()) {
      CHECK(m > 0);
      CHECK(is_on_curve(pt, a));
      CHECK(is_on_curve(pt, b));
    }
    CHECK(intersection_cycle(b, a, s1) == z);
    CHECK(intersection_cycle(a, b, s2) == z);
  }
  // the genericity retry loop should almost never trigger on random inputs
  CHECK(stats.retries <= 3 * stats.calls);
}

TEST_CASE("higher degree pair keeps the Bezout degree") {
  Rng rng(77);
  Shear s(5);
  Curve a = random_curve(rng, 4);
  Curve b = random_curve(rng, 2);
  ZeroCycle z = intersection_cycle(a, b, s);
  CHECK(z.degree() == 8);
  for (const auto& [pt, m] : z.points()) {
    CHECK(is_on_curve(pt, a));
    CHECK(is_on_curve(pt, b));
  }
}
