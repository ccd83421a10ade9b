#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "frlab/frmodel.hpp"

using namespace frlab;

TEST_CASE("f and f_prime at pinned points") {
  CHECK(FRModel(0.1).f(1.0) == doctest::Approx(1.05).epsilon(1e-14));
  CHECK(FRModel(0.5).f(2.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(FRModel(0.2).f_prime(-1.0) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(FRModel(1e-6).f(0.0) == 0.0);
  CHECK(FRModel(1e-6).f_prime(0.0) == 1.0);
}

TEST_CASE("rho_of_R and its inverse") {
  FRModel m(0.1);
  CHECK(m.rho_of_R(1.0) == doctest::Approx(0.0476550899).epsilon(1e-8));
  CHECK(FRModel(1.0).R_of_rho(0.5) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  // roundtrip over the admissible branch |kappa R| <= 0.5
  for (double kappa : {1e-3, 0.1, 1.0}) {
    FRModel mm(kappa);
    for (double kr = -0.5; kr <= 0.5; kr += 0.05) {
      const double R = kr / kappa;
      CHECK(std::abs(mm.R_of_rho(mm.rho_of_R(R)) - R) <= 1e-12 * (1.0 + std::abs(R)));
    }
  }
  CHECK_THROWS_AS(FRModel(1.0).rho_of_R(-1.0), NonPositiveConformalFactor);
}

TEST_CASE("W1, W2, W3 at pinned points") {
  FRModel m(0.1);
  const double s = m.rho_of_R(1.0);
  CHECK(m.W1(1.0) == doctest::Approx(-0.0454545455).epsilon(1e-8));
  CHECK(m.W2(s) == doctest::Approx(-0.0454545455).epsilon(1e-8));
  CHECK(m.W3(s) == doctest::Approx(1.05).epsilon(1e-10));
  CHECK(FRModel(1.0).W3(0.5) == doctest::Approx(3.1945280495).epsilon(1e-9));
  CHECK_THROWS_AS(FRModel(0.2).W1(-5.0), DivisionByZero);  // f'(-1/kappa) = 0
}

TEST_CASE("W1 composed with R_of_rho equals W2") {
  for (double kappa : {0.05, 0.3, 1.0}) {
    FRModel m(kappa);
    for (double s = -0.5; s <= 0.5; s += 0.025) {
      if (std::abs(s) < 1e-12) continue;
      CHECK(std::abs(m.W1(m.R_of_rho(s)) - m.W2(s)) <= 1e-12 * (1.0 + std::abs(m.W2(s))));
    }
  }
}

TEST_CASE("V_h and V_rho at pinned points and small-s behavior") {
  FRModel m(0.1);
  const double s = m.rho_of_R(1.0);
  CHECK(m.V_h(s) == doctest::Approx(0.0041322314).epsilon(1e-7));
  CHECK(m.V_rho(s) == doctest::Approx(-0.0021109399).epsilon(1e-7));
  // quadratic leading behavior with cubic remainder bound
  for (double t = -0.05; t <= 0.05; t += 0.004) {
    CHECK(std::abs(m.V_h(t) - 2.0 * t * t) <= 5.0 * std::abs(t * t * t));
    CHECK(std::abs(m.V_rho(t) + t * t) <= 5.0 * std::abs(t * t * t));
  }
  // limits V_h/s^2 -> 2, V_rho/s^2 -> -1
  for (double t : {1e-2, 1e-4, 1e-6}) {
    CHECK(std::abs(m.V_h(t) / (t * t) - 2.0) <= 10.0 * t);
    CHECK(std::abs(m.V_rho(t) / (t * t) + 1.0) <= 10.0 * t);
  }
}

TEST_CASE("series and exact branches agree at the crossover") {
  for (double kappa : {0.01, 0.1, 1.0}) {
    FRModel m(kappa);
    for (double mag : {0.5e-3, 1e-3, 2e-3}) {
      for (double s : {mag, -mag}) {
        CHECK(std::abs(m.W2_exact(s) - m.W2_series(s)) <= 1e-12);
        CHECK(std::abs(m.V_h_exact(s) - m.V_h_series(s)) <= 1e-12);
        CHECK(std::abs(m.V_rho_exact(s) - m.V_rho_series(s)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("potential balance: W2/(6 e^{2s}) + W3/(6 e^{4s}) = s/(3 kappa) + V_rho/kappa") {
  for (double kappa : {0.05, 0.2, 1.0}) {
    FRModel m(kappa);
    for (double s = -0.4; s <= 0.4; s += 0.05) {
      const double lhs = m.W2(s) / (6.0 * std::exp(2.0 * s)) + m.W3(s) / (6.0 * std::exp(4.0 * s));
      const double rhs = s / (3.0 * kappa) + m.V_rho(s) / kappa;
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
}
