#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symk2/error.hpp"
#include "symk2/rational.hpp"

namespace symk2 {
inline namespace arith {

using Exponents = std::vector<int>;

inline int exp_total(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic, descending: map iteration starts at the lead term.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = exp_total(a), db = exp_total(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

// Sparse multivariate polynomial over Q with a fixed ordered variable tuple.
// Invariants: no zero coefficients stored; every exponent tuple has the
// variable arity; terms iterate in descending graded-lex order.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rat, TermOrder>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly constant(std::vector<std::string> vars, const Rat& c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
  }
  static Poly variable(std::vector<std::string> vars, std::size_t idx) {
    Poly p(std::move(vars));
    if (idx >= p.vars_.size()) throw value_error("variable index out of range");
    Exponents e(p.vars_.size(), 0);
    e[idx] = 1;
    p.terms_[e] = 1;
    return p;
  }
  static Poly monomial(std::vector<std::string> vars, Exponents e, const Rat& c) {
    Poly p(std::move(vars));
    if (e.size() != p.vars_.size()) throw value_error("exponent arity mismatch");
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t arity() const { return vars_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
  }
  // Value of a constant polynomial (zero poly gives 0).
  Rat constant_value() const {
    if (!is_constant()) throw value_error("polynomial is not constant");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
  }
  bool is_one() const { return is_constant() && constant_value() == 1; }

  int total_degree() const {
    return terms_.empty() ? -1 : exp_total(terms_.begin()->first);
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree();
    for (const auto& [e, c] : terms_)
      if (exp_total(e) != d) return false;
    return true;
  }

  const Exponents& lead_exponents() const {
    if (terms_.empty()) throw value_error("zero polynomial has no lead term");
    return terms_.begin()->first;
  }
  const Rat& lead_coeff() const {
    if (terms_.empty()) throw value_error("zero polynomial has no lead term");
    return terms_.begin()->second;
  }

  Rat coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly r(a.vars_);
    Exponents e(a.arity());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  Poly pow(unsigned e) const {
    Poly r = constant(vars_, 1);
    Poly base = *this;
    while (e) {
      if (e & 1u) r *= base;
      if (e >>= 1u) base *= base;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Arbitrary total order (degree, then termwise) for use as a map key.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first)
        return TermOrder{}(ia->first, ib->first) ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
      if (ia->second != ib->second)
        return ia->second < ib->second ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
    if (ia != a.terms_.end()) return std::strong_ordering::greater;
    if (ib != b.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  // ---- structure ----------------------------------------------------------

  // Coefficients of *this viewed as univariate in `var`; the returned polys
  // keep the full variable tuple with degree 0 in `var`.
  std::map<int, Poly> coeffs_in(std::size_t var) const {
    std::map<int, Poly> out;
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      int k = r[var];
      r[var] = 0;
      auto it = out.find(k);
      if (it == out.end()) it = out.emplace(k, Poly(vars_)).first;
      it->second.add_term(r, c);
    }
    return out;
  }

  static Poly from_coeffs_in(std::size_t var, const std::map<int, Poly>& coeffs,
                             const std::vector<std::string>& vars) {
    Poly r(vars);
    for (const auto& [k, p] : coeffs)
      for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        f[var] += k;
        r.add_term(f, c);
      }
    return r;
  }

  // ---- substitution -------------------------------------------------------

  // Simultaneous substitution: variable i is replaced by images[i]; the
  // images share an arbitrary common variable tuple, which the result uses.
  Poly substitute_all(const std::vector<Poly>& images) const {
    if (images.size() != arity()) throw value_error("substitution arity mismatch");
    const std::vector<std::string>& tvars =
        images.empty() ? vars_ : images.front().vars();
    // power cache per variable
    std::vector<std::vector<Poly>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      powers[i].push_back(Poly::constant(tvars, 1));
    Poly out(tvars);
    for (const auto& [e, c] : terms_) {
      Poly term = Poly::constant(tvars, c);
      for (std::size_t i = 0; i < images.size(); ++i) {
        while (static_cast<int>(powers[i].size()) <= e[i])
          powers[i].push_back(powers[i].back() * images[i]);
        if (e[i] > 0) term *= powers[i][e[i]];
      }
      out += term;
    }
    return out;
  }

  Poly substitute(std::size_t var, const Poly& value) const {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < arity(); ++i)
      images.push_back(i == var ? value : Poly::variable(value.vars(),
                                                         index_in(value.vars(), vars_[i])));
    return substitute_all(images);
  }

  Poly evaluate_partial(std::size_t var, const Rat& a) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      int k = f[var];
      f[var] = 0;
      r.add_term(f, c * rat_pow(a, static_cast<unsigned>(k)));
    }
    return r;
  }

  Rat evaluate(const std::vector<Rat>& point) const {
    if (point.size() != arity()) throw value_error("evaluation arity mismatch");
    Rat out(0);
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (std::size_t i = 0; i < point.size(); ++i)
        t *= rat_pow(point[i], static_cast<unsigned>(e[i]));
      out += t;
    }
    return out;
  }

  // Formal partial derivative.
  Poly derivative(std::size_t var) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents f = e;
      f[var] -= 1;
      r.add_term(f, c * e[var]);
    }
    return r;
  }

  // ---- variable bookkeeping ----------------------------------------------

  // Drop a variable the polynomial does not use.
  Poly drop_var(std::size_t var) const {
    if (degree_in(var) > 0) throw value_error("cannot drop live variable");
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < arity(); ++i)
      if (i != var) nv.push_back(vars_[i]);
    Poly r(nv);
    for (const auto& [e, c] : terms_) {
      Exponents f;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != var) f.push_back(e[i]);
      r.terms_[f] = c;
    }
    return r;
  }

  // Rename variables (same arity, exponents untouched).
  Poly with_vars(std::vector<std::string> nv) const {
    if (nv.size() != arity()) throw value_error("rename arity mismatch");
    Poly r(std::move(nv));
    r.terms_ = terms_;
    return r;
  }

  // Embed into a larger variable tuple; `where[i]` is the position of our
  // variable i in the new tuple.
  Poly embed(std::vector<std::string> nv, const std::vector<std::size_t>& where) const {
    Poly r(std::move(nv));
    for (const auto& [e, c] : terms_) {
      Exponents f(r.arity(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
      r.terms_[f] = c;
    }
    return r;
  }

  // ---- normalization ------------------------------------------------------

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  Rat content() const {
    Rat c(0);
    for (const auto& [e, v] : terms_) c = rat_gcd(c, v);
    return c;
  }

  // unit * canonical == *this, canonical has coprime integer coefficients
  // and positive lead coefficient. Zero input is an error.
  std::pair<Rat, Poly> normalized() const {
    if (is_zero()) throw value_error("cannot normalize zero polynomial");
    Rat u = content();
    if (lead_coeff() < 0) u = -u;
    Poly p(vars_);
    for (const auto& [e, v] : terms_) p.terms_[e] = v / u;
    return {u, p};
  }
  Poly primitive_part() const { return normalized().second; }

  static std::size_t index_in(const std::vector<std::string>& vars,
                              const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw value_error("unknown variable " + name);
    return static_cast<std::size_t>(it - vars.begin());
  }

  // ---- printing -----------------------------------------------------------

  // Output re-parses under the CLI grammar: explicit '*' and '^', no
  // implicit multiplication.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rat a = rat_abs(c);
      bool neg = c < 0;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += rat_str(a);
      } else {
        // A leading "-x^2" would re-parse as (-x)^2; spell the unit out.
        bool lead_power = false;
        for (std::size_t i = 0; i < e.size(); ++i)
          if (e[i] != 0) {
            lead_power = e[i] > 1;
            break;
          }
        if (a != 1)
          out += rat_str(a) + "*";
        else if (out == "-" && lead_power)
          out += "1*";
        out += mono;
      }
    }
    return out;
  }

 private:
  void check_vars(const Poly& o) const {
    if (vars_ != o.vars_) throw value_error("variable tuple mismatch");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline const std::vector<std::string>& affine_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}
inline const std::vector<std::string>& projective_vars() {
  static const std::vector<std::string> v{"X", "Y", "Z"};
  return v;
}

inline Poly affine_poly() { return Poly(affine_vars()); }
inline Poly affine_const(const Rat& c) { return Poly::constant(affine_vars(), c); }
inline Poly affine_x() { return Poly::variable(affine_vars(), 0); }
inline Poly affine_y() { return Poly::variable(affine_vars(), 1); }

inline Poly proj_X() { return Poly::variable(projective_vars(), 0); }
inline Poly proj_Y() { return Poly::variable(projective_vars(), 1); }
inline Poly proj_Z() { return Poly::variable(projective_vars(), 2); }

// f(x,y) -> F(X,Y,Z) with F(X,Y,Z) = Z^deg * f(X/Z, Y/Z).
inline Poly homogenize(const Poly& p, int target_degree = -1) {
  if (p.vars() != affine_vars()) throw value_error("homogenize expects x,y");
  int d = std::max(p.total_degree(), 0);
  if (target_degree >= 0) {
    if (target_degree < d) throw value_error("target degree below total degree");
    d = target_degree;
  }
  Poly r(projective_vars());
  for (const auto& [e, c] : p.terms())
    r.add_term({e[0], e[1], d - e[0] - e[1]}, c);
  return r;
}

enum class Chart { Z, X, Y };

inline std::string chart_name(Chart c) {
  switch (c) {
    case Chart::Z: return "Z";
    case Chart::X: return "X";
    default: return "Y";
  }
}

// Restrict a polynomial in X,Y,Z to an affine chart. Chart Z yields a
// polynomial in (x, y) = (X/Z, Y/Z); charts X and Y yield (u, v) with
// (u, v) = (Y/X, Z/X) and (X/Y, Z/Y) respectively.
inline Poly dehomogenize(const Poly& p, Chart chart) {
  if (p.vars() != projective_vars()) throw value_error("dehomogenize expects X,Y,Z");
  std::vector<std::string> nv =
      chart == Chart::Z ? affine_vars() : std::vector<std::string>{"u", "v"};
  Poly r(nv);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(2);
    switch (chart) {
      case Chart::Z: f = {e[0], e[1]}; break;
      case Chart::X: f = {e[1], e[2]}; break;
      case Chart::Y: f = {e[0], e[2]}; break;
    }
    r.add_term(f, c);
  }
  return r;
}

}  // namespace arith
}  // namespace symk2
