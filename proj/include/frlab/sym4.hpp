#ifndef FRLAB_SYM4_HPP
#define FRLAB_SYM4_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "frlab/errors.hpp"

namespace frlab {

using Vec4 = std::array<double, 4>;

/// Symmetric 4x4 tensor, upper triangle only.
/// Component order: 00,01,02,03,11,12,13,22,23,33.
/// Metric signature convention is (-,+,+,+) throughout.
struct SymMatrix4 {
  std::array<double, 10> a{};

  static constexpr std::array<int, 4> signature{-1, 1, 1, 1};

  static constexpr int index(int i, int j) {
    if (i > j) std::swap(i, j);
    // row-offset table for the packed upper triangle
    constexpr int off[4] = {0, 4, 7, 9};
    return off[i] + (j - i);
  }

  double& operator()(int i, int j) { return a[index(i, j)]; }
  double operator()(int i, int j) const { return a[index(i, j)]; }

  double& operator[](int k) { return a[k]; }
  double operator[](int k) const { return a[k]; }

  SymMatrix4& operator+=(const SymMatrix4& o) {
    for (int k = 0; k < 10; ++k) a[k] += o.a[k];
    return *this;
  }
  SymMatrix4& operator-=(const SymMatrix4& o) {
    for (int k = 0; k < 10; ++k) a[k] -= o.a[k];
    return *this;
  }
  SymMatrix4& operator*=(double c) {
    for (int k = 0; k < 10; ++k) a[k] *= c;
    return *this;
  }

  friend SymMatrix4 operator+(SymMatrix4 x, const SymMatrix4& y) { return x += y; }
  friend SymMatrix4 operator-(SymMatrix4 x, const SymMatrix4& y) { return x -= y; }
  friend SymMatrix4 operator*(double c, SymMatrix4 x) { return x *= c; }

  double max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
  }
};

/// Minkowski metric diag(-1,1,1,1).
inline SymMatrix4 minkowski() {
  SymMatrix4 m;
  m(0, 0) = -1.0;
  m(1, 1) = m(2, 2) = m(3, 3) = 1.0;
  return m;
}

/// Pair (i,j) with i<=j for packed component k.
inline std::pair<int, int> unpack_index(int k) {
  constexpr int I[10] = {0, 0, 0, 0, 1, 1, 1, 2, 2, 3};
  constexpr int J[10] = {0, 1, 2, 3, 1, 2, 3, 2, 3, 3};
  return {I[k], J[k]};
}

namespace detail {

inline double det4(const SymMatrix4& g) {
  double m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = g(i, j);
  double det = 0.0;
  for (int c = 0; c < 4; ++c) {
    double sub[3][3];
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c2 = 0; c2 < 4; ++c2) {
        if (c2 == c) continue;
        sub[r - 1][cc++] = m[r][c2];
      }
    }
    double d3 = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
    det += ((c % 2 == 0) ? 1.0 : -1.0) * m[0][c] * d3;
  }
  return det;
}

}  // namespace detail

/// Inverse of a symmetric 4x4 matrix via the adjugate.
/// Throws SingularMetric when |det| <= 1e-14 * scale^4.
inline SymMatrix4 invert_sym4(const SymMatrix4& g) {
  const double scale = std::max(g.max_abs(), 1.0);
  const double det = detail::det4(g);
  if (std::abs(det) <= 1e-14 * scale * scale * scale * scale)
    throw SingularMetric("invert_sym4: determinant below tolerance");

  double m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = g(i, j);

  SymMatrix4 inv;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      // cofactor C_ji (= C_ij by symmetry)
      double sub[3][3];
      int rr = 0;
      for (int r = 0; r < 4; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < 4; ++c) {
          if (c == j) continue;
          sub[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      double d3 = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                  sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                  sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
      inv(i, j) = (((i + j) % 2 == 0) ? 1.0 : -1.0) * d3 / det;
    }
  }
  return inv;
}

}  // namespace frlab

#endif
