#pragma once

#include <cstdint>
#include <random>

#include "symk2/rational.hpp"

namespace symk2 {

// Deterministic randomness. All draws go through raw mt19937_64 output with
// modulo reduction so that identical seeds give identical streams on every
// platform (std distributions do not guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish integer in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    if (hi < lo) throw value_error("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  // Nonzero integer in [-mag, mag].
  long long nonzero(long long mag) {
    long long v = range(1, mag);
    return chance(0.5) ? v : -v;
  }

  Rat rational(long long mag, long long den_mag) {
    return Rat(range(-mag, mag), range(1, den_mag));
  }
  Rat nonzero_rational(long long mag, long long den_mag) {
    return Rat(nonzero(mag), range(1, den_mag));
  }

  // Derive an independent stream (for per-attempt shear matrices etc.).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace symk2
