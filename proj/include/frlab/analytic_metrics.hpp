#ifndef FRLAB_ANALYTIC_METRICS_HPP
#define FRLAB_ANALYTIC_METRICS_HPP

#include <cstdint>
#include <functional>

#include "frlab/tensor.hpp"

namespace frlab {

/// Closure producing the 10 metric components as jets at a point.
using MetricClosure = std::function<std::array<Jet4, 10>(const std::array<Jet4, 4>&)>;

inline MetricJet evaluate_metric(const MetricClosure& fn, const Vec4& x, int order = 4) {
  std::array<Jet4, 4> X;
  for (int a = 0; a < 4; ++a) X[a] = Jet4::variable(a, x[a]);
  MetricJet jet;
  jet.order = order;
  jet.c = fn(X);
  return jet;
}

/// Conformally flat metric g = e^{2 psi(x)} m for a jet-valued profile psi.
inline MetricClosure conformally_flat(std::function<Jet4(const std::array<Jet4, 4>&)> psi) {
  return [psi](const std::array<Jet4, 4>& X) {
    const Jet4 w = exp(2.0 * psi(X));
    std::array<Jet4, 10> g;
    for (int k = 0; k < 10; ++k) {
      auto [i, j] = unpack_index(k);
      double mk = (i == j) ? static_cast<double>(SymMatrix4::signature[i]) : 0.0;
      g[k] = w * mk;
    }
    return g;
  };
}

/// Smooth trigonometric perturbation of Minkowski with deterministic
/// pseudo-random phases; amplitude bounds ||h||_inf.
inline MetricClosure random_wavy_metric(std::uint64_t seed, double amplitude) {
  return [seed, amplitude](const std::array<Jet4, 4>& X) {
    std::array<Jet4, 10> g;
    std::uint64_t s = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next = [&s]() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return static_cast<double>(s % 1000003) / 1000003.0;
    };
    for (int k = 0; k < 10; ++k) {
      auto [i, j] = unpack_index(k);
      double mk = (i == j) ? static_cast<double>(SymMatrix4::signature[i]) : 0.0;
      Jet4 phase = Jet4::constant(6.2831853071795865 * next());
      for (int a = 0; a < 4; ++a) phase += (0.4 + next()) * X[a];
      g[k] = Jet4::constant(mk) + (amplitude * (0.3 + 0.7 * next())) * sin(phase);
    }
    return g;
  };
}

/// Scalar profile as a second-order jet from an analytic jet closure.
inline ScalarJet2 evaluate_scalar(const std::function<Jet4(const std::array<Jet4, 4>&)>& fn,
                                  const Vec4& x) {
  std::array<Jet4, 4> X;
  for (int a = 0; a < 4; ++a) X[a] = Jet4::variable(a, x[a]);
  const Jet4 u = fn(X);
  ScalarJet2 s;
  s.v = u.v;
  s.d1 = u.d1;
  for (int k = 0; k < 10; ++k) {
    auto [i, j] = unpack_index(k);
    s.d2[k] = u.g2(i, j);
  }
  return s;
}

}  // namespace frlab

#endif
