#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "frlab/initialdata.hpp"
#include "frlab/grid.hpp"

using namespace frlab;

namespace {

double state_sup_diff(const FieldState& a, const FieldState& b) {
  double m = 0.0;
  for (int k = 0; k < 10; ++k) {
    m = std::max(m, (a.h[k] - b.h[k]).max_abs());
    m = std::max(m, (a.h_t[k] - b.h_t[k]).max_abs());
  }
  m = std::max(m, (a.phi - b.phi).max_abs());
  m = std::max(m, (a.phi_t - b.phi_t).max_abs());
  m = std::max(m, (a.rho - b.rho).max_abs());
  m = std::max(m, (a.rho_t - b.rho_t).max_abs());
  return m;
}

}  // namespace

TEST_CASE("vacuum family is the zero state") {
  const Grid g(1, 64, -4.0, 4.0, 4);
  DataSpec spec;
  const FieldState S = build(spec, g);
  CHECK(state_sup_diff(S, FieldState(g)) == 0.0);
}

TEST_CASE("scalar bump profile and zero companions") {
  const Grid g(1, 256, -4.0, 4.0, 4);
  DataSpec spec;
  spec.family = DataSpec::Family::scalar_bump;
  spec.amplitude = 1e-3;
  spec.width = 1.0;
  const FieldState S = build(spec, g);
  for (int i = 0; i < g.n; ++i) {
    const double x = g.coord(i) - g.center();
    CHECK(S.phi.v[i] == doctest::Approx(1e-3 * std::exp(-x * x)).epsilon(1e-14));
  }
  CHECK(S.phi_t.max_abs() == 0.0);
  CHECK(S.rho.max_abs() == 0.0);
  for (int k = 0; k < 10; ++k) CHECK(S.h[k].max_abs() == 0.0);
}

TEST_CASE("bump and gauge-wave data are linear in the amplitude") {
  const Grid g(1, 256, -8.0, 8.0, 4);
  for (auto family : {DataSpec::Family::scalar_bump, DataSpec::Family::gauge_wave}) {
    DataSpec s1;
    s1.family = family;
    s1.amplitude = 1e-3;
    s1.width = 1.0;
    DataSpec s2 = s1;
    s2.amplitude = 2e-3;
    FieldState a = build(s1, g);
    a.for_each([](GridFunction& u) { u *= 2.0; });
    CHECK(state_sup_diff(a, build(s2, g)) == 0.0);
  }
}

TEST_CASE("localized data are supported away from the boundary") {
  const Grid g(1, 256, -8.0, 8.0, 4);
  DataSpec spec;
  spec.family = DataSpec::Family::scalar_bump;
  spec.amplitude = 1e-3;
  spec.width = 1.0;
  const FieldState S = build(spec, g);
  for (int i : {0, 1, 2, g.n - 2, g.n - 1})
    CHECK(std::abs(S.phi.v[i]) <= 1e-14 * spec.amplitude);

  DataSpec gw = spec;
  gw.family = DataSpec::Family::gauge_wave;
  const FieldState W = build(gw, g);
  for (int i : {0, 1, g.n - 1}) {
    for (int k = 0; k < 10; ++k) CHECK(std::abs(W.h[k].v[i]) <= 1e-13 * spec.amplitude);
  }
}

TEST_CASE("under-resolved widths are rejected") {
  const Grid g(1, 64, -4.0, 4.0, 4);  // h = 0.125
  DataSpec spec;
  spec.family = DataSpec::Family::scalar_bump;
  spec.width = 0.4;  // < 4h = 0.5
  CHECK_THROWS_AS(build(spec, g), UnresolvedData);
  spec.width = 0.6;
  CHECK_NOTHROW(build(spec, g));
}

TEST_CASE("gauge wave is right-moving: dt h = -dx h up to stencil error") {
  const Grid g(1, 512, -8.0, 8.0, 4);
  DataSpec spec;
  spec.family = DataSpec::Family::gauge_wave;
  spec.amplitude = 1e-3;
  spec.width = 1.0;
  spec.polarization = 1;
  const FieldState S = build(spec, g);
  for (int k = 0; k < 10; ++k) {
    const GridFunction dx = d1(S.h[k], 0);
    CHECK((S.h_t[k] + dx).max_abs() <= 1e-5 * spec.amplitude);
  }
}

TEST_CASE("manufactured state: determinism, seed dependence, builder agreement") {
  const Grid g(1, 128, -4.0, 4.0, 4);
  const FRModel model(0.1);
  DataSpec spec;
  spec.family = DataSpec::Family::manufactured;
  spec.amplitude = 1e-2;
  spec.seed = 7;
  const FieldState a = build(spec, g, &model);
  const FieldState b = build(spec, g, &model);
  CHECK(state_sup_diff(a, b) == 0.0);

  RHSBundle acc;
  const FieldState c = build_manufactured(spec, g, model, &acc);
  CHECK(state_sup_diff(a, c) == 0.0);
  CHECK(acc.h_tt[0].max_abs() > 0.0);

  DataSpec other = spec;
  other.seed = 8;
  CHECK(state_sup_diff(a, build(other, g, &model)) > 0.0);

  CHECK_THROWS_AS(build(spec, g, nullptr), ConfigError);
}

TEST_CASE("manufactured rho is nontrivial and bounded by the amplitude scale") {
  const Grid g(1, 128, -4.0, 4.0, 4);
  const FRModel model(0.1);
  DataSpec spec;
  spec.family = DataSpec::Family::manufactured;
  spec.amplitude = 1e-2;
  const FieldState S = build(spec, g, &model);
  CHECK(S.rho.max_abs() > 0.0);
  // rho = (1/2) ln(1 + kappa R) with R one derivative order below h
  CHECK(S.rho.max_abs() <= 10.0 * spec.amplitude);
  CHECK(S.finite());
  CHECK(S.max_abs_h() <= 0.25);
}
