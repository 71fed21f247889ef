#pragma once

#include <map>
#include <string>

#include "symk2/point.hpp"

namespace symk2 {
inline namespace geom {

// Formal Z-linear combination of closed points; zero coefficients are never
// stored.
class ZeroCycle {
 public:
  ZeroCycle() = default;

  const std::map<ClosedPoint, int>& points() const { return pts_; }
  bool is_zero() const { return pts_.empty(); }

  int coefficient(const ClosedPoint& p) const {
    auto it = pts_.find(p);
    return it == pts_.end() ? 0 : it->second;
  }

  void add(const ClosedPoint& p, int mult) {
    if (mult == 0) return;
    auto [it, inserted] = pts_.emplace(p, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) pts_.erase(it);
    }
  }

  // Degree over Q: multiplicities weighted by residue field degrees.
  int degree() const {
    int d = 0;
    for (const auto& [p, m] : pts_) d += p.degree() * m;
    return d;
  }

  friend ZeroCycle operator+(ZeroCycle a, const ZeroCycle& b) {
    for (const auto& [p, m] : b.pts_) a.add(p, m);
    return a;
  }
  friend ZeroCycle operator-(ZeroCycle a, const ZeroCycle& b) {
    for (const auto& [p, m] : b.pts_) a.add(p, -m);
    return a;
  }
  ZeroCycle operator-() const {
    ZeroCycle r;
    for (const auto& [p, m] : pts_) r.pts_.emplace(p, -m);
    return r;
  }
  friend ZeroCycle operator*(int k, const ZeroCycle& z) {
    ZeroCycle r;
    if (k != 0)
      for (const auto& [p, m] : z.pts_) r.pts_.emplace(p, k * m);
    return r;
  }

  friend bool operator==(const ZeroCycle& a, const ZeroCycle& b) { return a.pts_ == b.pts_; }

  std::string str() const {
    if (pts_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, m] : pts_) {
      if (m < 0)
        out += first ? "-" : " - ";
      else if (!first)
        out += " + ";
      int a = m < 0 ? -m : m;
      if (a != 1) out += std::to_string(a) + "*";
      out += p.str();
      first = false;
    }
    return out;
  }

 private:
  std::map<ClosedPoint, int> pts_;
};

// Part of the cycle supported in the affine plane, i.e. away from the line
// at infinity. Points with Z = 0 are exactly those whose canonical chart is
// not Z.
inline ZeroCycle cycle_restrict_affine(const ZeroCycle& z) {
  ZeroCycle r;
  for (const auto& [p, m] : z.points())
    if (p.chart() == Chart::Z) r.add(p, m);
  return r;
}

}  // namespace geom
}  // namespace symk2
