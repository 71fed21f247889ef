#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace symk2 {
inline namespace arith {

// Exact base arithmetic. Rat is always stored canonically
// (gcd(|num|, den) = 1, den >= 1); GMP maintains that invariant.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline Int int_gcd(const Int& a, const Int& b) { return gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return lcm(a, b); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// gcd on Q: the positive rational c with a/c, b/c coprime integers.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return rat_abs(b);
  if (b == 0) return rat_abs(a);
  return Rat(gcd(rat_num(a), rat_num(b)), lcm(rat_den(a), rat_den(b)));
}

inline std::string rat_str(const Rat& q) { return q.str(); }

inline Rat rat_pow(const Rat& q, unsigned e) {
  Rat r(1), base = q;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

}  // namespace arith
}  // namespace symk2
