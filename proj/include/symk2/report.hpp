#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symk2/analysis.hpp"
#include "symk2/map.hpp"
#include "symk2/probe.hpp"
#include "symk2/tame.hpp"

namespace symk2 {
inline namespace cli {

using ordered_json = nlohmann::ordered_json;

inline std::string form_kind_str(FormKind k) {
  switch (k) {
    case FormKind::Preserves: return "preserves";
    case FormKind::ScalesBy: return "scales-by";
    default: return "non-proportional";
  }
}

struct FiberSample {
  Rat a, b;
  int count = 0;
  int redraws = 0;
};

struct Report {
  RationalMap map = RationalMap::identity();
  FormVerdict form;
  bool k2_verdict = false;
  bool agreement = false;
  Divisor div_f, div_g;
  TameElement tame;
  CaseLabel label;
  Prop6Report prop6;
  std::vector<FiberSample> fibers;  // filled when trials were requested
  std::uint64_t seed = 0;
  double elapsed_ms = 0;  // rendered in text output only
};

// Draw targets until the fiber is clean (no shared component, reduced).
inline FiberSample sample_fiber(const RationalMap& m, Rng& rng, const Shear& shear,
                                IntersectionStats* stats = nullptr) {
  FiberSample s;
  for (int attempt = 0; attempt < 64; ++attempt) {
    s.a = Rat(rng.range(-19, 19), rng.range(1, 4));
    s.b = Rat(rng.range(-19, 19), rng.range(1, 4));
    FiberReport r = fiber_count(m, s.a, s.b, shear, stats);
    if (!r.flags.needs_redraw()) {
      s.count = r.count;
      return s;
    }
    ++s.redraws;
  }
  throw internal_error("no clean fiber target found after 64 draws");
}

inline Report build_check_report(const RationalMap& m, std::uint64_t seed, int trials = 0) {
  Report r;
  r.map = m;
  r.seed = seed;
  Shear sh(seed);
  IntersectionStats st;
  r.form = is_symplectic_form(m);
  r.div_f = principal_divisor(m.f());
  r.div_g = principal_divisor(m.g());
  r.tame = tame_symbol(r.div_f, r.div_g, sh, &st);
  r.k2_verdict = equals(r.tame, reference_symbol(sh, &st));
  r.agreement = (r.form.kind == FormKind::Preserves) == r.k2_verdict;
  r.label = classify_case(r.div_f, r.div_g);
  r.prop6 = prop6_verify(m, sh, &st);
  if (trials > 0) {
    Rng rng(Rng::mix(seed, 0x46494252ull));
    for (int i = 0; i < trials; ++i) r.fibers.push_back(sample_fiber(m, rng, sh, &st));
  }
  return r;
}

// ---- serialization -----------------------------------------------------------

inline ordered_json point_to_json(const ClosedPoint& pt) {
  if (pt.is_rational()) return pt.str();
  ordered_json j;
  j["chart"] = chart_name(pt.chart());
  j["p"] = pt.p_str();
  j["q"] = pt.q().str();
  return j;
}

inline ordered_json cycle_to_json(const ZeroCycle& z) {
  ordered_json arr = ordered_json::array();
  for (const auto& [pt, m] : z.points()) {
    ordered_json e;
    e["point"] = point_to_json(pt);
    e["multiplicity"] = m;
    arr.push_back(std::move(e));
  }
  return arr;
}

inline ordered_json divisor_to_json(const Divisor& d) {
  ordered_json arr = ordered_json::array();
  for (const auto& [c, m] : d.components()) {
    ordered_json e;
    e["curve"] = c.poly().str();
    e["multiplicity"] = m;
    arr.push_back(std::move(e));
  }
  return arr;
}

inline ordered_json tame_to_json(const TameElement& t) {
  ordered_json arr = ordered_json::array();
  for (const auto& [c, z] : t.components()) {
    ordered_json e;
    e["curve"] = c.poly().str();
    e["cycle"] = cycle_to_json(z);
    arr.push_back(std::move(e));
  }
  return arr;
}

inline ordered_json prop6_to_json(const Prop6Report& p) {
  ordered_json j;
  j["hypotheses"]["tame_preserved"] = p.hypotheses.tame_preserved;
  j["hypotheses"]["orientation"] = orientation_str(p.hypotheses.orientation);
  j["hypotheses"]["no_common_components_except_line_inf"] =
      p.hypotheses.no_common_components_except_line_inf;
  j["hypotheses"]["base_loci_disjoint"] = p.hypotheses.base_loci_disjoint;
  j["conclusion_holds"] = p.conclusion_holds;
  j["torus_swap_form"] = p.torus_swap_form;
  j["divisor_f"] = p.d_shape;
  j["divisor_g"] = p.e_shape;
  ordered_json shared = ordered_json::array();
  for (const Curve& c : p.shared_components) shared.push_back(c.poly().str());
  j["shared_components"] = std::move(shared);
  ordered_json overlap = ordered_json::array();
  for (const ClosedPoint& pt : p.base_overlap) overlap.push_back(point_to_json(pt));
  j["base_overlap"] = std::move(overlap);
  return j;
}

inline ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["map"]["f"] = r.map.f().str();
  j["map"]["g"] = r.map.g().str();
  j["form_verdict"]["kind"] = form_kind_str(r.form.kind);
  if (r.form.kind == FormKind::NonProportional)
    j["form_verdict"]["ratio"] = r.form.ratio.str();
  else
    j["form_verdict"]["scale"] = rat_str(r.form.scale);
  j["k2_verdict"] = r.k2_verdict;
  j["agreement"] = r.agreement;
  j["divisors"]["f"] = divisor_to_json(r.div_f);
  j["divisors"]["g"] = divisor_to_json(r.div_g);
  j["tame_components"] = tame_to_json(r.tame);
  j["case_label"]["l_h"] = line_case_str(r.label.l_h);
  j["case_label"]["l_v"] = line_case_str(r.label.l_v);
  j["prop6"] = prop6_to_json(r.prop6);
  if (!r.fibers.empty()) {
    ordered_json arr = ordered_json::array();
    for (const FiberSample& s : r.fibers) {
      ordered_json e;
      e["target"] = "(" + rat_str(s.a) + ", " + rat_str(s.b) + ")";
      e["count"] = s.count;
      e["redraws"] = s.redraws;
      arr.push_back(std::move(e));
    }
    j["fibers"] = std::move(arr);
  }
  j["seed"] = r.seed;
  return j;
}

inline std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "map: " << r.map.str() << "\n";
  out << "form verdict: " << form_kind_str(r.form.kind);
  if (r.form.kind == FormKind::ScalesBy) out << " " << rat_str(r.form.scale);
  if (r.form.kind == FormKind::NonProportional) out << " (ratio " << r.form.ratio.str() << ")";
  out << "\n";
  out << "symbol verdict: " << (r.k2_verdict ? "preserves" : "does not preserve") << "\n";
  out << "agreement: " << (r.agreement ? "yes" : "NO - INTERNAL INCONSISTENCY") << "\n";
  out << "div f: " << r.div_f.str() << "\n";
  out << "div g: " << r.div_g.str() << "\n";
  out << "tame symbol: " << r.tame.str() << "\n";
  out << "case: " << r.label.str() << "\n";
  const Prop6Report& p = r.prop6;
  out << "hypotheses: tame=" << (p.hypotheses.tame_preserved ? "yes" : "no")
      << ", orientation=" << orientation_str(p.hypotheses.orientation)
      << ", shared-components-ok=" << (p.hypotheses.no_common_components_except_line_inf ? "yes" : "no")
      << ", base-loci-disjoint=" << (p.hypotheses.base_loci_disjoint ? "yes" : "no") << "\n";
  out << "conclusion: " << (p.conclusion_holds ? "divisor shapes collapse to the axes" : "not asserted")
      << (p.torus_swap_form ? " (scaled-coordinate form)" : "") << "\n";
  for (const FiberSample& s : r.fibers)
    out << "fiber (" << rat_str(s.a) << ", " << rat_str(s.b) << "): " << s.count
        << " point(s), " << s.redraws << " redraw(s)\n";
  out << "seed: " << r.seed << "\n";
  out << "elapsed: " << r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace cli
}  // namespace symk2
