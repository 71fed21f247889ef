#pragma once

#include <array>
#include <cstdint>

#include "symk2/error.hpp"
#include "symk2/poly.hpp"
#include "symk2/rational.hpp"
#include "symk2/rng.hpp"

namespace symk2 {
inline namespace geom {

// Exact 3x3 matrix over Q.
struct Mat3 {
  std::array<std::array<Rat, 3>, 3> a{};

  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
    return m;
  }

  Rat det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }

  Mat3 inverse() const {
    Rat d = det();
    if (d == 0) throw value_error("matrix is singular");
    auto minor = [this](int r0, int c0, int r1, int c1) {
      return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    };
    Mat3 inv;
    inv.a[0][0] = minor(1, 1, 2, 2) / d;
    inv.a[0][1] = -minor(0, 1, 2, 2) / d;
    inv.a[0][2] = minor(0, 1, 1, 2) / d;
    inv.a[1][0] = -minor(1, 0, 2, 2) / d;
    inv.a[1][1] = minor(0, 0, 2, 2) / d;
    inv.a[1][2] = -minor(0, 0, 1, 2) / d;
    inv.a[2][0] = minor(1, 0, 2, 1) / d;
    inv.a[2][1] = -minor(0, 0, 2, 1) / d;
    inv.a[2][2] = minor(0, 0, 1, 1) / d;
    return inv;
  }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.a[i][j] += x.a[i][k] * y.a[k][j];
    return r;
  }

  std::array<Rat, 3> apply(const std::array<Rat, 3>& v) const {
    std::array<Rat, 3> r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i] += a[i][j] * v[j];
    return r;
  }
};

// Invertible linear change of projective coordinates, drawn deterministically
// from a seed. New coordinates are m * (X, Y, Z).
class Shear {
 public:
  explicit Shear(std::uint64_t seed) : seed_(seed) {
    Rng rng(Rng::mix(seed, 0x5348454152ull));  // stream tag for shears
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m_.a[i][j] = Rat(static_cast<long>(rng.range(-5, 5)));
    } while (m_.det() == 0);
    minv_ = m_.inverse();
  }

  std::uint64_t seed() const { return seed_; }
  const Mat3& matrix() const { return m_; }
  const Mat3& inverse_matrix() const { return minv_; }

  // Fresh shear for a retry; deterministic in (seed, attempt).
  Shear retry(std::uint64_t attempt) const { return Shear(Rng::mix(seed_, attempt + 1)); }

  // The defining polynomial in the new coordinates: P'(w) = P(inverse(m) w),
  // so that P'(m p) = P(p) for every point p.
  Poly transform(const Poly& p) const {
    if (p.vars() != projective_vars()) throw value_error("shear acts on X, Y, Z");
    std::vector<Poly> images;
    for (int i = 0; i < 3; ++i) {
      Poly img(projective_vars());
      for (int j = 0; j < 3; ++j) {
        if (minv_.a[i][j] == 0) continue;
        Exponents e(3, 0);
        e[static_cast<std::size_t>(j)] = 1;
        img.add_term(e, minv_.a[i][j]);
      }
      images.push_back(img);
    }
    return p.substitute_all(images);
  }

 private:
  Mat3 m_, minv_;
  std::uint64_t seed_;
};

}  // namespace geom
}  // namespace symk2
