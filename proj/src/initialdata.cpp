#include "frlab/initialdata.hpp"

#include <cmath>

#include "frlab/analytic_metrics.hpp"
#include "frlab/tensor.hpp"

namespace frlab {

namespace {

void check_resolved(const DataSpec& spec, const Grid& grid) {
  if (spec.width < 4.0 * grid.h())
    throw UnresolvedData("initial data width below 4 grid spacings");
}

FieldState scalar_bump(const DataSpec& spec, const Grid& grid) {
  check_resolved(spec, grid);
  FieldState S(grid);
  const double w2 = spec.width * spec.width;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double r2 = 0.0;
    for (int a = 0; a < grid.dims; ++a) {
      const double x = centered_coord(grid, i, a) - spec.center;
      r2 += x * x;
    }
    S.phi.v[i] = spec.amplitude * std::exp(-r2 / w2);
  }
  return S;
}

FieldState gauge_wave(const DataSpec& spec, const Grid& grid) {
  check_resolved(spec, grid);
  if (spec.polarization < 0 || spec.polarization > 3)
    throw ConfigError("gauge_wave: polarization must be 0..3");
  FieldState S(grid);
  const double w2 = spec.width * spec.width;
  // xi_b = eps chi(x^1 - t - c) delta_{b,pol};  h = d xi + d xi with the
  // profile direction D = (-1, +1, 0, 0); dt h swaps chi' for -chi''
  const double D[4] = {-1.0, 1.0, 0.0, 0.0};
  const int pol = spec.polarization;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = centered_coord(grid, i, 0) - spec.center;
    const double chi = std::exp(-u * u / w2);
    const double chi1 = -2.0 * u / w2 * chi;
    const double chi2 = (4.0 * u * u / (w2 * w2) - 2.0 / w2) * chi;
    for (int k = 0; k < 10; ++k) {
      auto [a, b] = unpack_index(k);
      const double pattern = D[a] * (b == pol ? 1.0 : 0.0) + D[b] * (a == pol ? 1.0 : 0.0);
      S.h[k].v[i] = spec.amplitude * chi1 * pattern;
      S.h_t[k].v[i] = -spec.amplitude * chi2 * pattern;
    }
  }
  return S;
}

// smooth periodic metric family for the manufactured state
std::array<Jet4, 10> wavy_base(const std::array<Jet4, 4>& X, int dims, double k0, double amp,
                               unsigned seed) {
  std::array<Jet4, 10> g;
  std::uint64_t s = seed * 2862933555777941757ULL + 3037000493ULL;
  auto next = [&s]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return static_cast<double>(s % 1000003) / 1000003.0;
  };
  for (int k = 0; k < 10; ++k) {
    auto [i, j] = unpack_index(k);
    const double mk = (i == j) ? static_cast<double>(SymMatrix4::signature[i]) : 0.0;
    Jet4 phase = Jet4::constant(6.2831853071795865 * next());
    const int mode = 1 + static_cast<int>(2.0 * next());  // 1 or 2
    for (int a = 1; a <= dims; ++a) phase += (mode * k0) * X[a];
    phase += (0.5 + next()) * X[0];  // smooth, arbitrary time dependence
    g[k] = Jet4::constant(mk) + (amp * (0.3 + 0.7 * next())) * sin(phase);
  }
  return g;
}

}  // namespace

FieldState build_manufactured(const DataSpec& spec, const Grid& grid, const FRModel& model,
                              RHSBundle* acc_out) {
  FieldState S(grid);
  RHSBundle acc(grid);
  const double L = grid.x_max - grid.x_min;
  const double k0 = 2.0 * 3.14159265358979323846 / L;
  const SymMatrix4 mink = minkowski();

  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::array<Jet4, 4> X;
    X[0] = Jet4::variable(0, 0.0);
    for (int a = 0; a < 3; ++a)
      X[a + 1] = Jet4::variable(a + 1, a < grid.dims ? centered_coord(grid, i, a) : 0.0);

    MetricJet mj;
    mj.order = 4;
    mj.c = wavy_base(X, grid.dims, k0, spec.amplitude, spec.seed);

    const Jet4 R = scalar_curvature_jet(mj);
    const Jet4 fp = model.kappa * R + 1.0;
    if (fp.v <= 0.0)
      throw NonPositiveConformalFactor("manufactured data: 1 + kappa R <= 0");
    const Jet4 rho = 0.5 * log(fp);
    const Jet4 w = exp(2.0 * rho);

    for (int k = 0; k < 10; ++k) {
      const Jet4 hj = w * mj.c[k] - mink[k];
      S.h[k].v[i] = hj.v;
      S.h_t[k].v[i] = hj.d1[0];
      acc.h_tt[k].v[i] = hj.g2(0, 0);
    }
    S.rho.v[i] = rho.v;
    S.rho_t.v[i] = rho.d1[0];
    acc.rho_tt.v[i] = rho.g2(0, 0);
  }
  if (acc_out) *acc_out = std::move(acc);
  return S;
}

FieldState build(const DataSpec& spec, const Grid& grid, const FRModel* model) {
  switch (spec.family) {
    case DataSpec::Family::vacuum:
      return FieldState(grid);
    case DataSpec::Family::scalar_bump:
      return scalar_bump(spec, grid);
    case DataSpec::Family::gauge_wave:
      return gauge_wave(spec, grid);
    case DataSpec::Family::manufactured: {
      if (!model) throw ConfigError("manufactured data requires a model");
      return build_manufactured(spec, grid, *model, nullptr);
    }
  }
  throw ConfigError("unknown data family");
}

}  // namespace frlab
