#ifndef FRLAB_JET4_HPP
#define FRLAB_JET4_HPP

#include <array>
#include <cmath>

#include "frlab/errors.hpp"

namespace frlab {

/// Dense truncated Taylor scalar in 4 variables, derivatives up to order 4.
/// Arithmetic is exact on the stored orders: order-k output entries depend
/// only on input entries of order <= k, so a jet built from analytic
/// formulas carries exact partial derivatives of the composed expression.
/// Storage is dense and symmetric (all index permutations filled).
struct Jet4 {
  double v = 0.0;
  std::array<double, 4> d1{};
  std::array<double, 16> d2{};
  std::array<double, 64> d3{};
  std::array<double, 256> d4{};

  double g1(int a) const { return d1[a]; }
  double g2(int a, int b) const { return d2[4 * a + b]; }
  double g3(int a, int b, int c) const { return d3[16 * a + 4 * b + c]; }
  double g4(int a, int b, int c, int d) const { return d4[64 * a + 16 * b + 4 * c + d]; }

  double& r2(int a, int b) { return d2[4 * a + b]; }
  double& r3(int a, int b, int c) { return d3[16 * a + 4 * b + c]; }
  double& r4(int a, int b, int c, int d) { return d4[64 * a + 16 * b + 4 * c + d]; }

  static Jet4 constant(double c) {
    Jet4 j;
    j.v = c;
    return j;
  }

  /// Coordinate function x^axis evaluated at value x.
  static Jet4 variable(int axis, double x) {
    Jet4 j;
    j.v = x;
    j.d1[axis] = 1.0;
    return j;
  }

  Jet4 operator-() const {
    Jet4 r;
    r.v = -v;
    for (int i = 0; i < 4; ++i) r.d1[i] = -d1[i];
    for (int i = 0; i < 16; ++i) r.d2[i] = -d2[i];
    for (int i = 0; i < 64; ++i) r.d3[i] = -d3[i];
    for (int i = 0; i < 256; ++i) r.d4[i] = -d4[i];
    return r;
  }

  Jet4& operator+=(const Jet4& o) {
    v += o.v;
    for (int i = 0; i < 4; ++i) d1[i] += o.d1[i];
    for (int i = 0; i < 16; ++i) d2[i] += o.d2[i];
    for (int i = 0; i < 64; ++i) d3[i] += o.d3[i];
    for (int i = 0; i < 256; ++i) d4[i] += o.d4[i];
    return *this;
  }
  Jet4& operator-=(const Jet4& o) {
    v -= o.v;
    for (int i = 0; i < 4; ++i) d1[i] -= o.d1[i];
    for (int i = 0; i < 16; ++i) d2[i] -= o.d2[i];
    for (int i = 0; i < 64; ++i) d3[i] -= o.d3[i];
    for (int i = 0; i < 256; ++i) d4[i] -= o.d4[i];
    return *this;
  }
  Jet4& operator*=(double c) {
    v *= c;
    for (int i = 0; i < 4; ++i) d1[i] *= c;
    for (int i = 0; i < 16; ++i) d2[i] *= c;
    for (int i = 0; i < 64; ++i) d3[i] *= c;
    for (int i = 0; i < 256; ++i) d4[i] *= c;
    return *this;
  }

  friend Jet4 operator+(Jet4 x, const Jet4& y) { return x += y; }
  friend Jet4 operator-(Jet4 x, const Jet4& y) { return x -= y; }
  friend Jet4 operator*(double c, Jet4 x) { return x *= c; }
  friend Jet4 operator*(Jet4 x, double c) { return x *= c; }
  friend Jet4 operator+(Jet4 x, double c) {
    x.v += c;
    return x;
  }
  friend Jet4 operator+(double c, Jet4 x) {
    x.v += c;
    return x;
  }
  friend Jet4 operator-(Jet4 x, double c) {
    x.v -= c;
    return x;
  }
  friend Jet4 operator-(double c, const Jet4& x) { return (-x) + c; }

  friend Jet4 operator*(const Jet4& f, const Jet4& g) {
    Jet4 r;
    r.v = f.v * g.v;
    for (int a = 0; a < 4; ++a) r.d1[a] = f.d1[a] * g.v + f.v * g.d1[a];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        r.r2(a, b) = f.g2(a, b) * g.v + f.d1[a] * g.d1[b] + f.d1[b] * g.d1[a] + f.v * g.g2(a, b);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          r.r3(a, b, c) = f.g3(a, b, c) * g.v + f.v * g.g3(a, b, c) + f.g2(a, b) * g.d1[c] +
                          f.g2(a, c) * g.d1[b] + f.g2(b, c) * g.d1[a] + f.d1[a] * g.g2(b, c) +
                          f.d1[b] * g.g2(a, c) + f.d1[c] * g.g2(a, b);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d)
            r.r4(a, b, c, d) =
                f.g4(a, b, c, d) * g.v + f.v * g.g4(a, b, c, d) +
                f.g3(a, b, c) * g.d1[d] + f.g3(a, b, d) * g.d1[c] + f.g3(a, c, d) * g.d1[b] +
                f.g3(b, c, d) * g.d1[a] + f.d1[a] * g.g3(b, c, d) + f.d1[b] * g.g3(a, c, d) +
                f.d1[c] * g.g3(a, b, d) + f.d1[d] * g.g3(a, b, c) +
                f.g2(a, b) * g.g2(c, d) + f.g2(a, c) * g.g2(b, d) + f.g2(a, d) * g.g2(b, c) +
                f.g2(b, c) * g.g2(a, d) + f.g2(b, d) * g.g2(a, c) + f.g2(c, d) * g.g2(a, b);
    return r;
  }

  /// Composition with a univariate function given its derivative values
  /// c[k] = phi^(k)(v), k=0..4 (Faa di Bruno).
  Jet4 compose(const std::array<double, 5>& c) const {
    const Jet4& u = *this;
    Jet4 r;
    r.v = c[0];
    for (int a = 0; a < 4; ++a) r.d1[a] = c[1] * u.d1[a];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) r.r2(a, b) = c[2] * u.d1[a] * u.d1[b] + c[1] * u.g2(a, b);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          r.r3(a, b, cc) = c[3] * u.d1[a] * u.d1[b] * u.d1[cc] +
                           c[2] * (u.g2(a, b) * u.d1[cc] + u.g2(a, cc) * u.d1[b] +
                                   u.g2(b, cc) * u.d1[a]) +
                           c[1] * u.g3(a, b, cc);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          for (int d = 0; d < 4; ++d)
            r.r4(a, b, cc, d) =
                c[4] * u.d1[a] * u.d1[b] * u.d1[cc] * u.d1[d] +
                c[3] * (u.g2(a, b) * u.d1[cc] * u.d1[d] + u.g2(a, cc) * u.d1[b] * u.d1[d] +
                        u.g2(a, d) * u.d1[b] * u.d1[cc] + u.g2(b, cc) * u.d1[a] * u.d1[d] +
                        u.g2(b, d) * u.d1[a] * u.d1[cc] + u.g2(cc, d) * u.d1[a] * u.d1[b]) +
                c[2] * (u.g2(a, b) * u.g2(cc, d) + u.g2(a, cc) * u.g2(b, d) +
                        u.g2(a, d) * u.g2(b, cc) + u.g3(a, b, cc) * u.d1[d] +
                        u.g3(a, b, d) * u.d1[cc] + u.g3(a, cc, d) * u.d1[b] +
                        u.g3(b, cc, d) * u.d1[a]) +
                c[1] * u.g4(a, b, cc, d);
    return r;
  }
};

inline Jet4 exp(const Jet4& u) {
  const double e = std::exp(u.v);
  return u.compose({e, e, e, e, e});
}

inline Jet4 log(const Jet4& u) {
  const double x = u.v;
  if (x <= 0.0) throw Error("Jet4 log: nonpositive argument");
  return u.compose({std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x), -6.0 / (x * x * x * x)});
}

inline Jet4 recip(const Jet4& u) {
  const double x = u.v;
  if (x == 0.0) throw DivisionByZero("Jet4 recip: zero argument");
  const double i = 1.0 / x;
  return u.compose({i, -i * i, 2.0 * i * i * i, -6.0 * i * i * i * i, 24.0 * i * i * i * i * i});
}

inline Jet4 operator/(const Jet4& f, const Jet4& g) { return f * recip(g); }
inline Jet4 operator/(const Jet4& f, double c) { return f * (1.0 / c); }
inline Jet4 operator/(double c, const Jet4& g) { return recip(g) * c; }

inline Jet4 sin(const Jet4& u) {
  const double s = std::sin(u.v), c = std::cos(u.v);
  return u.compose({s, c, -s, -c, s});
}

inline Jet4 cos(const Jet4& u) {
  const double s = std::sin(u.v), c = std::cos(u.v);
  return u.compose({c, -s, -c, s, c});
}

/// Partial derivative of a jet: the result is valid to one order less.
inline Jet4 jet_deriv(const Jet4& u, int mu) {
  Jet4 r;
  r.v = u.d1[mu];
  for (int a = 0; a < 4; ++a) r.d1[a] = u.g2(mu, a);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r.r2(a, b) = u.g3(mu, a, b);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) r.r3(a, b, c) = u.g4(mu, a, b, c);
  // order-4 entries of the derivative are unknown; left zero.
  return r;
}

}  // namespace frlab

#endif
