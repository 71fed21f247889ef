#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "symk2/curve.hpp"
#include "symk2/cycle.hpp"
#include "symk2/divisor.hpp"
#include "symk2/error.hpp"
#include "symk2/intersect.hpp"
#include "symk2/map.hpp"
#include "symk2/shear.hpp"

namespace symk2 {
inline namespace ktheory {

// The image of a symbol {f, g} under the componentwise tame map: for every
// curve other than the line at infinity, a degree-zero cycle on the
// projective plane. Zero components are never stored, so the trivial element
// has an empty map. Elements remember which shear produced them; comparing
// or combining elements across different shears is refused.
class TameElement {
 public:
  TameElement() = default;

  const std::map<Curve, ZeroCycle>& components() const { return comps_; }
  bool is_empty() const { return comps_.empty(); }
  std::optional<std::uint64_t> shear_seed() const { return seed_; }

  ZeroCycle component(const Curve& c) const {
    auto it = comps_.find(c);
    return it == comps_.end() ? ZeroCycle() : it->second;
  }

  void set_component(const Curve& c, ZeroCycle z) {
    if (c == Curve::line_inf())
      throw value_error("the line at infinity does not index tame components");
    if (z.is_zero())
      comps_.erase(c);
    else
      comps_[c] = std::move(z);
  }

  void set_seed(std::uint64_t s) { seed_ = s; }

  std::string str() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [c, z] : comps_) {
      if (!out.empty()) out += "; ";
      out += c.str() + " -> " + z.str();
    }
    return out;
  }

 private:
  std::map<Curve, ZeroCycle> comps_;
  std::optional<std::uint64_t> seed_;
};

namespace detail {

inline std::optional<std::uint64_t> merge_seeds(const std::optional<std::uint64_t>& a,
                                                const std::optional<std::uint64_t>& b) {
  if (a && b && *a != *b) throw value_error("tame elements built with different shears");
  return a ? a : b;
}

}  // namespace detail

inline TameElement tame_add(const TameElement& a, const TameElement& b) {
  auto seed = detail::merge_seeds(a.shear_seed(), b.shear_seed());
  TameElement r = a;
  if (seed) r.set_seed(*seed);
  for (const auto& [c, z] : b.components()) r.set_component(c, r.component(c) + z);
  return r;
}

inline TameElement tame_negate(const TameElement& a) {
  TameElement r;
  if (a.shear_seed()) r.set_seed(*a.shear_seed());
  for (const auto& [c, z] : a.components()) r.set_component(c, -z);
  return r;
}

inline TameElement tame_scale(const TameElement& a, int n) {
  TameElement r;
  if (a.shear_seed()) r.set_seed(*a.shear_seed());
  if (n != 0)
    for (const auto& [c, z] : a.components()) r.set_component(c, n * z);
  return r;
}

// Equality in the tame image: identical canonical components everywhere,
// boundary points included.
inline bool equals(const TameElement& a, const TameElement& b) {
  detail::merge_seeds(a.shear_seed(), b.shear_seed());
  return a.components() == b.components();
}

// The component along C of the tame image of {f, g} with div f = D,
// div g = E:
//
//   alpha_C = nu_C(D) * (C sqcap E) - nu_C(E) * (C sqcap D),
//
// where C sqcap E sums intersection cycles of C with the components of E
// other than C itself. The two one-sided cases are the specializations with
// one vanishing valuation.
inline ZeroCycle alpha_component(const Divisor& d, const Divisor& e, const Curve& c,
                                 const Shear& shear, IntersectionStats* stats = nullptr) {
  if (c == Curve::line_inf())
    throw value_error("alpha component is indexed by curves other than the line at infinity");
  if (d.degree() != 0 || e.degree() != 0)
    throw value_error("alpha component needs principal divisors");

  int vd = valuation(d, c), ve = valuation(e, c);
  Divisor cd;
  cd.add(c, 1);
  ZeroCycle out;
  if (vd != 0) out = out + vd * sqcap(cd, e, shear, stats);
  if (ve != 0) out = out - ve * sqcap(cd, d, shear, stats);
  if (out.degree() != 0) throw internal_error("alpha component must have degree zero");
  return out;
}

// The full tame image of the symbol with divisors D and E: one degree-zero
// cycle for every curve in the supports, zero components dropped.
inline TameElement tame_symbol(const Divisor& d, const Divisor& e, const Shear& shear,
                               IntersectionStats* stats = nullptr) {
  if (d.degree() != 0 || e.degree() != 0)
    throw value_error("tame symbol needs principal divisors");
  std::set<Curve> support;
  for (const auto& [c, m] : d.components())
    if (c != Curve::line_inf()) support.insert(c);
  for (const auto& [c, m] : e.components())
    if (c != Curve::line_inf()) support.insert(c);

  TameElement t;
  t.set_seed(shear.seed());
  for (const Curve& c : support) t.set_component(c, alpha_component(d, e, c, shear, stats));
  return t;
}

// The tame image of {x, y}, computed through the same code path as every
// other symbol so that global conventions cancel in comparisons.
inline TameElement reference_symbol(const Shear& shear, IntersectionStats* stats = nullptr) {
  return tame_symbol(principal_divisor(RationalFunction::x()),
                     principal_divisor(RationalFunction::y()), shear, stats);
}

// Whether the map fixes the class of {x, y}: the tame image of {f, g} must
// coincide with the reference element.
inline bool preserves_k2(const RationalMap& m, const Shear& shear,
                         IntersectionStats* stats = nullptr) {
  TameElement pulled = tame_symbol(principal_divisor(m.f()), principal_divisor(m.g()), shear, stats);
  return equals(pulled, reference_symbol(shear, stats));
}

}  // namespace ktheory
}  // namespace symk2
