#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "frlab/dynamics.hpp"
#include "frlab/initialdata.hpp"
#include "frlab/norms.hpp"

using namespace frlab;

namespace {

// smooth periodic random field: a few low modes with random phases
GridFunction smooth_random(const Grid& g, std::mt19937& rng, double amp) {
  std::uniform_real_distribution<double> pdist(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> kdist(1, 3);
  GridFunction u(g);
  const double L = g.x_max - g.x_min;
  for (int mode = 0; mode < 3; ++mode) {
    const double k = 2.0 * M_PI * kdist(rng) / L, ph = pdist(rng);
    for (int i = 0; i < g.n; ++i) u.v[i] += amp * std::sin(k * g.coord(i) + ph) / 3.0;
  }
  return u;
}

FieldState smooth_random_state(const Grid& g, std::mt19937& rng, double amp) {
  FieldState S(g);
  for (auto& c : S.h) c = smooth_random(g, rng, amp);
  for (auto& c : S.h_t) c = smooth_random(g, rng, amp);
  S.phi = smooth_random(g, rng, amp);
  S.phi_t = smooth_random(g, rng, amp);
  S.rho = smooth_random(g, rng, amp);
  S.rho_t = smooth_random(g, rng, amp);
  return S;
}

double max_abs(const GridFunction& u) { return u.max_abs(); }

}  // namespace

TEST_CASE("zero state is a fixed point with zero residuals") {
  const Grid g(1, 64, -4.0, 4.0, 4);
  const FRModel model(0.1);
  const FieldState S(g);
  const RHSBundle rhs = rhs_augmented(model, S);
  for (const auto& c : rhs.h_tt) CHECK(max_abs(c) == 0.0);
  CHECK(max_abs(rhs.phi_tt) == 0.0);
  CHECK(max_abs(rhs.rho_tt) == 0.0);

  const ResidualReport r = residual_report(model, S, rhs);
  for (int a = 0; a < 4; ++a) {
    CHECK(r.gauge_l2[a] == 0.0);
    CHECK(r.gauge_sup[a] == 0.0);
  }
  CHECK(r.aug_sup == 0.0);
  CHECK(r.ham_sup == 0.0);
  for (int a = 0; a < 3; ++a) CHECK(r.mom_sup[a] == 0.0);
  CHECK(r.matter_sup == 0.0);
}

TEST_CASE("einstein limit agrees with the augmented system at rho = 0") {
  const Grid g(1, 128, -4.0, 4.0, 4);
  const FRModel model(0.1);
  std::mt19937 rng(3);
  FieldState S = smooth_random_state(g, rng, 5e-3);
  S.rho = GridFunction(g);
  S.rho_t = GridFunction(g);
  // at rho = 0 the potentials and the phi source vanish identically, so the
  // two assemblies must agree exactly on (h, phi)
  const RHSBundle a = rhs_augmented(model, S);
  const RHSBundle e = rhs_einstein(S);
  for (int k = 0; k < 10; ++k) CHECK(max_abs(a.h_tt[k] - e.h_tt[k]) == 0.0);
  CHECK(max_abs(a.phi_tt - e.phi_tt) == 0.0);
}

TEST_CASE("dropping the rho couplings reproduces the einstein limit") {
  const Grid g(1, 128, -4.0, 4.0, 4);
  const FRModel model(0.1);
  std::mt19937 rng(5);
  const FieldState S = smooth_random_state(g, rng, 5e-3);  // nonzero rho
  Couplings cpl;
  cpl.kappa_terms = false;
  const RHSBundle a = rhs_augmented(model, S, cpl);
  const RHSBundle e = rhs_einstein(S, cpl);
  for (int k = 0; k < 10; ++k) CHECK(max_abs(a.h_tt[k] - e.h_tt[k]) == 0.0);
  CHECK(max_abs(a.phi_tt - e.phi_tt) == 0.0);
}

TEST_CASE("frozen coefficients on the same state reproduce the full rhs") {
  const Grid g(1, 128, -4.0, 4.0, 4);
  const FRModel model(0.2);
  std::mt19937 rng(7);
  const FieldState S = smooth_random_state(g, rng, 5e-3);
  const RHSBundle a = rhs_augmented(model, S);
  const RHSBundle f = rhs_frozen(model, S, S);
  for (int k = 0; k < 10; ++k) CHECK(max_abs(a.h_tt[k] - f.h_tt[k]) <= 1e-15);
  CHECK(max_abs(a.phi_tt - f.phi_tt) <= 1e-15);
  CHECK(max_abs(a.rho_tt - f.rho_tt) <= 1e-15);
}

TEST_CASE("phi sector reduces to the free wave on flat background") {
  const Grid g(1, 256, -M_PI, M_PI, 4);
  const FRModel model(0.1);
  FieldState S(g);
  for (int i = 0; i < g.n; ++i) S.phi.v[i] = 1e-3 * std::sin(g.coord(i));
  const RHSBundle rhs = rhs_augmented(model, S);
  const GridFunction lap = d2(S.phi, 0, 0);
  CHECK(max_abs(rhs.phi_tt - lap) <= 1e-15);
}

TEST_CASE("linearized rho sector has the klein-gordon dispersion") {
  // rho = A cos(kx): rho_tt = -(k^2 + 1/(3 kappa)) rho + O(A^2) + stencil
  const Grid g(1, 256, -M_PI, M_PI, 4);
  const FRModel model(1.0 / 3.0);
  const double A = 1e-6;
  FieldState S(g);
  for (int i = 0; i < g.n; ++i) S.rho.v[i] = A * std::cos(g.coord(i));
  const RHSBundle rhs = rhs_augmented(model, S);
  const double om2 = 1.0 + 1.0 / (3.0 * model.kappa);  // = 2
  GridFunction expect = S.rho;
  expect *= -om2;
  CHECK(max_abs(rhs.rho_tt - expect) <= 1e-2 * om2 * A);
}

TEST_CASE("gauge residual vanishes on minkowski and is quadratically small on gauge waves") {
  const Grid g(1, 256, -4.0, 4.0, 4);
  FieldState flat(g);
  for (const auto& r : gauge_residual(flat)) CHECK(max_abs(r) == 0.0);

  DataSpec spec;
  spec.family = DataSpec::Family::gauge_wave;
  spec.amplitude = 1e-3;
  spec.width = 1.0;
  const FieldState S = build(spec, g);
  double worst = 0.0;
  for (const auto& r : gauge_residual(S)) worst = std::max(worst, max_abs(r));
  // O(eps^2) quadratic remainder plus stencil error on the eps-size profile
  CHECK(worst <= 50.0 * spec.amplitude * spec.amplitude);
  CHECK(worst <= 0.05 * spec.amplitude);  // far below the linear scale
}

TEST_CASE("augmentation residual on manufactured data is at truncation level and refines") {
  const FRModel model(0.1);
  DataSpec spec;
  spec.family = DataSpec::Family::manufactured;
  spec.amplitude = 1e-2;
  auto level = [&](int n) {
    const Grid g(1, n, -4.0, 4.0, 4);
    RHSBundle acc;
    const FieldState S = build_manufactured(spec, g, model, &acc);
    return max_abs(augmentation_residual(model, S, acc));
  };
  const double e128 = level(128), e256 = level(256);
  CHECK(e128 <= 1e-6);
  CHECK(e128 / e256 >= 8.0);  // fourth-order stencils
}

TEST_CASE("constraints vanish on minkowski and capture the scalar bump violation") {
  const FRModel model(0.1);
  const Grid g(1, 256, -4.0, 4.0, 4);
  const ConstraintResiduals flat = constraint_residuals(model, FieldState(g));
  CHECK(max_abs(flat.hamiltonian) == 0.0);
  for (const auto& m : flat.momentum) CHECK(max_abs(m) == 0.0);

  // time-symmetric scalar bump: Hamiltonian violation is a continuum
  // quantity (quadratic in d phi), momentum stays at rounding
  DataSpec spec;
  spec.family = DataSpec::Family::scalar_bump;
  spec.amplitude = 1e-3;
  auto ham_sup = [&](int n) {
    const Grid gg(1, n, -4.0, 4.0, 4);
    const ConstraintResiduals r = constraint_residuals(model, build(spec, gg, &model));
    for (const auto& m : r.momentum) CHECK(max_abs(m) <= 1e-12);
    return max_abs(r.hamiltonian);
  };
  const double h128 = ham_sup(128), h256 = ham_sup(256);
  CHECK(h128 > 1e-8);  // genuinely nonzero, scale eps^2
  CHECK(h128 == doctest::Approx(h256).epsilon(0.01));  // grid-converged
}

TEST_CASE("matter wave residual: consistency and ablation negative control") {
  const Grid g(1, 256, -M_PI, M_PI, 4);
  const FRModel model(0.1);
  std::mt19937 rng(11);
  FieldState S(g);
  for (int i = 0; i < g.n; ++i) S.phi.v[i] = 1e-3 * std::sin(g.coord(i));
  S.rho = smooth_random(g, rng, 1e-3);

  const RHSBundle acc = rhs_augmented(model, S);
  const double consistent = max_abs(matter_wave_residual(S, acc));
  CHECK(consistent <= 1e-12);

  Couplings cpl;
  cpl.kappa_terms = false;  // drops the 2 g(dphi, drho) source
  const RHSBundle bad = rhs_augmented(model, S, cpl);
  const double broken = max_abs(matter_wave_residual(S, bad));
  CHECK(broken > 100.0 * std::max(consistent, 1e-15));
}

TEST_CASE("rhs input validation") {
  const Grid g(1, 64, -4.0, 4.0, 4);
  const FRModel model(0.1);
  FieldState S(g);
  S.phi.v[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(rhs_augmented(model, S), NaNDetected);

  FieldState big(g);
  for (auto& v : big.h[0].v) v = 0.3;  // above eps0 = 0.25
  CHECK_THROWS_AS(rhs_augmented(model, big), CoercivityLost);
}
