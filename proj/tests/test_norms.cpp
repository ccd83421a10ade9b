#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "frlab/norms.hpp"

using namespace frlab;

namespace {

GridFunction random_field(const Grid& g, std::mt19937& rng, double amp = 1.0) {
  std::uniform_real_distribution<double> dist(-amp, amp);
  GridFunction u(g);
  for (auto& v : u.v) v = dist(rng);
  return u;
}

GridFunction gaussian3(const Grid& g, double w = 1.0) {
  GridFunction u(g);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = radius_at(g, i);
    u.v[i] = std::exp(-r * r / (w * w));
  }
  return u;
}

}  // namespace

TEST_CASE("l2 norm of a 3d gaussian") {
  // ||exp(-r^2)||_2 = (pi/2)^{3/4} = 1.40331...
  const Grid g(3, 64, -8.0, 8.0, 4);
  CHECK(l2_norm(gaussian3(g)) == doctest::Approx(std::pow(M_PI / 2.0, 0.75)).epsilon(1e-10));
}

TEST_CASE("weighted sup norm saturates on u = 1/(1+r)") {
  const Grid g(3, 32, -4.0, 4.0, 4);
  GridFunction u(g);
  for (std::size_t i = 0; i < u.size(); ++i) u.v[i] = 1.0 / (1.0 + radius_at(g, i));
  CHECK(e_minus1(u) == 1.0);
}

TEST_CASE("derivative family size and x_norm reduction at d=0") {
  const Grid g1(1, 64, -4.0, 4.0, 4);
  const Grid g3(3, 16, -4.0, 4.0, 4);
  std::mt19937 rng(3);
  const GridFunction u1 = random_field(g1, rng), u3 = random_field(g3, rng);
  CHECK(derivative_family(u1, 0).size() == 1);
  CHECK(derivative_family(u1, 1).size() == 2);       // u, dx u
  CHECK(derivative_family(u3, 1).size() == 7);       // u, 3 translations, 3 rotations
  CHECK(x_norm(u1, 0) == doctest::Approx(l2_norm(u1)).epsilon(1e-14));
  CHECK(x_norm(u3, 0) == doctest::Approx(l2_norm(u3)).epsilon(1e-14));
}

TEST_CASE("norm axioms on random fields") {
  std::mt19937 rng(7);
  const Grid g(1, 64, -4.0, 4.0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const GridFunction u = random_field(g, rng), w = random_field(g, rng);
    for (int d = 0; d <= 2; ++d) {
      const double nu = x_norm(u, d), nw = x_norm(w, d);
      CHECK(nu >= 0.0);
      CHECK(x_norm(u + w, d) <= nu + nw + 1e-12);
      GridFunction su = u;
      su *= -2.5;
      CHECK(x_norm(su, d) == doctest::Approx(2.5 * nu).epsilon(1e-12));
      CHECK(e_h_norm(u, w, d) ==
            doctest::Approx(e_minus1(u) + e_p_norm(u, w, d)).epsilon(1e-12));
    }
  }
}

TEST_CASE("energy of a flat-space sine mode") {
  // u = sin(x), ut = 0 on [0,2pi)^3: E = sqrt(int cos^2) = sqrt((2pi)^3/2)
  const Grid g(3, 64, 0.0, 2.0 * M_PI, 4);
  std::array<GridFunction, 10> h;
  for (auto& c : h) c = GridFunction(g);
  GridFunction u(g), ut(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::size_t t = i;
    const int ix = static_cast<int>(t % g.n);
    u.v[i] = std::sin(g.coord(ix));
  }
  const double expect = std::sqrt(0.5 * std::pow(2.0 * M_PI, 3));  // 11.13665
  CHECK(energy(h, u, ut) == doctest::Approx(expect).epsilon(1e-4));
  CHECK(expect == doctest::Approx(11.1366).epsilon(1e-4));
}

TEST_CASE("massive energy of a constant on the unit box") {
  const Grid g(1, 64, 0.0, 1.0, 4);
  std::array<GridFunction, 10> h;
  for (auto& c : h) c = GridFunction(g);
  GridFunction u(g), ut(g);
  for (auto& v : u.v) v = 1.0;
  CHECK(energy_c(h, u, ut, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("energy coercivity under small metric perturbations") {
  // ||h||_inf <= 0.1: the curved energy is equivalent to the flat one with
  // constant <= 1.2 both ways
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dist(-0.1, 0.1);
  const Grid g(1, 64, -4.0, 4.0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<GridFunction, 10> h;
    for (auto& c : h) {
      c = GridFunction(g);
      const double val = dist(rng);
      for (auto& v : c.v) v = val;
    }
    std::array<GridFunction, 10> flat;
    for (auto& c : flat) c = GridFunction(g);
    const GridFunction u = random_field(g, rng), ut = random_field(g, rng);
    const double ec = energy(h, u, ut), ef = energy(flat, u, ut);
    CHECK(ec <= 1.2 * ef);
    CHECK(ef <= 1.2 * ec);
  }
}

TEST_CASE("energy rejects non-coercive metrics") {
  const Grid g(1, 64, -4.0, 4.0, 4);
  std::array<GridFunction, 10> h;
  for (auto& c : h) c = GridFunction(g);
  for (auto& v : h[0].v) v = 1.5;  // g^00 flips sign
  GridFunction u(g), ut(g);
  for (auto& v : ut.v) v = 1.0;
  CHECK_THROWS_AS(energy(h, u, ut), CoercivityLost);
}

TEST_CASE("discrete sobolev embedding constant is grid stable") {
  // E_{-1}(u) <= C X^2(u) with C independent of resolution (to 1%)
  auto constant_at = [](int n) {
    const Grid g(3, n, -6.0, 6.0, 4);
    const GridFunction u = gaussian3(g, 1.3);
    return e_minus1(u) / x_norm(u, 2);
  };
  const double c32 = constant_at(32), c64 = constant_at(64);
  CHECK(std::abs(c32 - c64) <= 0.01 * c64);
}

TEST_CASE("comparison distance and picard distance basics") {
  const Grid g(1, 64, -4.0, 4.0, 4);
  std::mt19937 rng(19);
  FieldState a(g), b(g);
  CHECK(comparison_distance(a, b, 1) == 0.0);
  b.phi = random_field(g, rng, 1e-3);
  b.rho = random_field(g, rng, 1e-3);
  const double d1v = comparison_distance(a, b, 1);
  CHECK(d1v > 0.0);
  // the comparison distance deliberately ignores rho
  FieldState c = b;
  c.rho = GridFunction(g);
  CHECK(comparison_distance(a, c, 1) == doctest::Approx(d1v).epsilon(1e-14));
  // picard distance adds the kappa-weighted rho content
  const double kappa = 0.1;
  CHECK(picard_distance(a, b, kappa) >= picard_distance(a, c, kappa));
  CHECK(picard_distance(a, b, kappa) >= l2_norm(b.rho) / std::sqrt(kappa) - 1e-15);
}

TEST_CASE("norm report covers all fields at the requested depth") {
  const Grid g(1, 64, -4.0, 4.0, 4);
  std::mt19937 rng(23);
  FieldState S(g);
  S.phi = random_field(g, rng, 1e-2);
  S.h[4] = random_field(g, rng, 1e-2);
  const NormReport r = norm_report(S, 1, 2.0);
  CHECK(r.d == 1);
  CHECK(r.f[10].x == doctest::Approx(x_norm(S.phi, 1)).epsilon(1e-14));
  CHECK(r.f[4].x > 0.0);
  CHECK(r.f[11].x == 0.0);
  for (const auto& fn : r.f) {
    CHECK(fn.x >= 0.0);
    CHECK(fn.egc >= fn.eg);
  }
}
