#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symk2/curve.hpp"
#include "symk2/cycle.hpp"
#include "symk2/divisor.hpp"
#include "symk2/intersect.hpp"
#include "symk2/map.hpp"
#include "symk2/point.hpp"
#include "symk2/shear.hpp"
#include "symk2/tame.hpp"

namespace symk2 {
inline namespace analysis {

// ---- membership classification ---------------------------------------------------

// How a coordinate line sits relative to the supports of a divisor pair:
// CaseI = in Supp(D) only, CaseII = in Supp(E) only, CaseIII = in both.
enum class LineCase { Absent, CaseI, CaseII, CaseIII };

inline std::string line_case_str(LineCase c) {
  switch (c) {
    case LineCase::Absent: return "absent";
    case LineCase::CaseI: return "I";
    case LineCase::CaseII: return "II";
    default: return "III";
  }
}

struct CaseLabel {
  LineCase l_h = LineCase::Absent;
  LineCase l_v = LineCase::Absent;
  bool operator==(const CaseLabel&) const = default;
  std::string str() const { return "l_h: " + line_case_str(l_h) + ", l_v: " + line_case_str(l_v); }
};

inline CaseLabel classify_case(const Divisor& d, const Divisor& e) {
  auto label = [&](const Curve& c) {
    bool in_d = valuation(d, c) != 0, in_e = valuation(e, c) != 0;
    if (in_d && in_e) return LineCase::CaseIII;
    if (in_d) return LineCase::CaseI;
    if (in_e) return LineCase::CaseII;
    return LineCase::Absent;
  };
  return CaseLabel{label(Curve::line_h()), label(Curve::line_v())};
}

inline std::set<Curve> common_components(const Divisor& d, const Divisor& e) {
  std::set<Curve> out;
  for (const auto& [c, m] : d.components())
    if (valuation(e, c) != 0) out.insert(c);
  return out;
}

// ---- step-by-step diagnostics ----------------------------------------------------

// step1: the support of D ⊓ E lies inside the three coordinate vertices.
// step2: no support component other than the two coordinate axes passes
// through the origin. Offending points/curves are listed on failure.
struct StepDiagnostics {
  bool step1 = true;
  std::vector<ClosedPoint> step1_offenders;
  bool step2 = true;
  std::vector<Curve> step2_offenders;
};

inline StepDiagnostics step_diagnostics(const Divisor& d, const Divisor& e,
                                        const Shear& shear, IntersectionStats* stats = nullptr) {
  StepDiagnostics out;
  ZeroCycle cap = sqcap(d, e, shear, stats);
  ClosedPoint o = ClosedPoint::origin(), ih = ClosedPoint::inf_h(), iv = ClosedPoint::inf_v();
  for (const auto& [pt, m] : cap.points())
    if (!(pt == o) && !(pt == ih) && !(pt == iv)) out.step1_offenders.push_back(pt);
  out.step1 = out.step1_offenders.empty();

  std::set<Curve> support;
  for (const auto& [c, m] : d.components()) support.insert(c);
  for (const auto& [c, m] : e.components()) support.insert(c);
  for (const Curve& c : support) {
    if (c == Curve::line_h() || c == Curve::line_v()) continue;
    if (is_on_curve(o, c)) out.step2_offenders.push_back(c);
  }
  out.step2 = out.step2_offenders.empty();
  return out;
}

// ---- the base-locus proposition ------------------------------------------------

enum class Orientation { None, Direct, Swapped };

inline std::string orientation_str(Orientation o) {
  switch (o) {
    case Orientation::Direct: return "direct";
    case Orientation::Swapped: return "swapped";
    default: return "none";
  }
}

struct Prop6Hypotheses {
  bool tame_preserved = false;
  Orientation orientation = Orientation::None;  // holds when != None
  bool no_common_components_except_line_inf = false;
  bool base_loci_disjoint = false;
  bool all() const {
    return tame_preserved && orientation != Orientation::None &&
           no_common_components_except_line_inf && base_loci_disjoint;
  }
};

struct Prop6Report {
  Prop6Hypotheses hypotheses;
  bool conclusion_holds = false;   // asserted only when all hypotheses hold
  bool torus_swap_form = false;    // coordinates are scaled x/y (possibly swapped)
  std::string d_shape, e_shape;    // the two principal divisors, printed
  std::vector<Curve> shared_components;  // common components other than the line at infinity
  std::vector<ClosedPoint> base_overlap;  // points in both base loci
};

// Checks the hypotheses (symbol preservation, the one-line-per-support
// orientation in either direction, no shared components except the line at
// infinity, disjoint base loci) and, when they all hold, verifies that the
// coordinate divisors collapse to axis minus infinity.
inline Prop6Report prop6_verify(const RationalMap& m, const Shear& shear,
                                IntersectionStats* stats = nullptr) {
  Prop6Report rep;
  Divisor d = principal_divisor(m.f());
  Divisor e = principal_divisor(m.g());
  rep.d_shape = d.str();
  rep.e_shape = e.str();

  rep.hypotheses.tame_preserved = preserves_k2(m, shear, stats);

  CaseLabel cl = classify_case(d, e);
  if (cl.l_h == LineCase::CaseI && cl.l_v == LineCase::CaseII)
    rep.hypotheses.orientation = Orientation::Direct;
  else if (cl.l_h == LineCase::CaseII && cl.l_v == LineCase::CaseI)
    rep.hypotheses.orientation = Orientation::Swapped;

  for (const Curve& c : common_components(d, e))
    if (!(c == Curve::line_inf())) rep.shared_components.push_back(c);
  rep.hypotheses.no_common_components_except_line_inf = rep.shared_components.empty();

  std::set<ClosedPoint> bf = base_locus(m.f(), shear, stats);
  std::set<ClosedPoint> bg = base_locus(m.g(), shear, stats);
  for (const ClosedPoint& p : bf)
    if (bg.count(p) != 0) rep.base_overlap.push_back(p);
  rep.hypotheses.base_loci_disjoint = rep.base_overlap.empty();

  if (!rep.hypotheses.all()) return rep;

  // Shapes are compared up to the unit normalization implicit in the
  // orientation choice: replacing a coordinate by its reciprocal negates its
  // divisor, and the admissible sign patterns are already pinned down by the
  // symbol-preservation hypothesis.
  auto axis_shape = [](const Curve& axis, const Divisor& div) {
    Divisor shape;
    shape.add(axis, 1);
    shape.add(Curve::line_inf(), -1);
    return div == shape || div == -shape;
  };
  rep.conclusion_holds = rep.hypotheses.orientation == Orientation::Direct
                             ? (axis_shape(Curve::line_h(), d) && axis_shape(Curve::line_v(), e))
                             : (axis_shape(Curve::line_v(), d) && axis_shape(Curve::line_h(), e));

  auto scaled_power = [](const RationalFunction& r, const RationalFunction& v) {
    return (r / v).is_constant() || (r * v).is_constant();
  };
  RationalFunction rx = RationalFunction::x(), ry = RationalFunction::y();
  rep.torus_swap_form = (scaled_power(m.f(), rx) && scaled_power(m.g(), ry)) ||
                        (scaled_power(m.f(), ry) && scaled_power(m.g(), rx));
  return rep;
}

}  // namespace analysis
}  // namespace symk2
