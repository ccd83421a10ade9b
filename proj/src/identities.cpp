#include "frlab/identities.hpp"

#include <cmath>
#include <random>

#include "frlab/analytic_metrics.hpp"
#include "frlab/tensor.hpp"

namespace frlab {

namespace {

// smooth scalar profile with bounded derivatives of all orders
std::function<Jet4(const std::array<Jet4, 4>&)> wavy_scalar(std::mt19937_64& rng,
                                                            double amplitude) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::array<double, 4> k{}, k2{};
  const double p1 = 6.2831853071795865 * U(rng), p2 = 6.2831853071795865 * U(rng);
  for (int a = 0; a < 4; ++a) {
    k[a] = 0.3 + 0.7 * U(rng);
    k2[a] = 0.3 + 0.7 * U(rng);
  }
  const double a1 = amplitude * (0.4 + 0.6 * U(rng));
  const double a2 = amplitude * (0.4 + 0.6 * U(rng));
  return [=](const std::array<Jet4, 4>& X) {
    Jet4 u1 = Jet4::constant(p1), u2 = Jet4::constant(p2);
    for (int a = 0; a < 4; ++a) {
      u1 += k[a] * X[a];
      u2 += k2[a] * X[a];
    }
    return a1 * sin(u1) + a2 * cos(u2);
  };
}

std::array<Jet4, 4> point_vars(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::array<Jet4, 4> X;
  for (int a = 0; a < 4; ++a) X[a] = Jet4::variable(a, U(rng));
  return X;
}

// conformal Ricci relation on g = e^{2 psi} m against the closed form
// -2 (dd psi - dpsi dpsi) - (box_m psi + 2 |dpsi|_m^2) m
double conformal_ricci_residual(std::mt19937_64& rng, bool corrupt) {
  double worst = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    const auto psi = wavy_scalar(rng, 0.2);
    const auto X = point_vars(rng);
    const Jet4 p = psi(X);

    const MetricClosure cf = conformally_flat(psi);
    MetricJet jet;
    jet.order = 2;
    jet.c = cf(X);
    Geom geo = geom_from_jet(jet);
    if (corrupt)
      for (int k = 0; k < 10; ++k) geo.dg[1][k] = -geo.dg[1][k];
    const SymMatrix4 ric = ricci_full(geo);

    const SymMatrix4 mink = minkowski();
    double boxp = 0.0, grad2 = 0.0;
    for (int a = 0; a < 4; ++a) {
      const double s = SymMatrix4::signature[a];
      boxp += s * p.g2(a, a);
      grad2 += s * p.d1[a] * p.d1[a];
    }
    for (int k = 0; k < 10; ++k) {
      auto [a, b] = unpack_index(k);
      const double rhs =
          -2.0 * (p.g2(a, b) - p.d1[a] * p.d1[b]) - (boxp + 2.0 * grad2) * mink[k];
      worst = std::max(worst, std::abs(ric[k] - rhs));
    }
  }
  return worst;
}

// conformal field-equation identity with rho = (1/2) ln f'(R_g):
// e^{2rho} Rdag_ab - 6 e^{2rho} drho drho + (1/2) gdag W2(rho)
//   == N_ab - (1/2) g_ab tr_g(N)
double conformal_field_equation_residual(const FRModel& model, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    const MetricClosure base = random_wavy_metric(rng(), 0.05);
    const auto X = point_vars(rng);

    MetricJet gj;
    gj.order = 4;
    gj.c = base(X);

    const Jet4 R = scalar_curvature_jet(gj);
    const Jet4 fp = model.kappa * R + 1.0;
    const Jet4 rho = 0.5 * log(fp);
    const Jet4 e2r = exp(2.0 * rho);

    // g-dagger = e^{2 rho} g, valid to second order
    MetricJet dj;
    dj.order = 2;
    for (int k = 0; k < 10; ++k) dj.c[k] = e2r * gj.c[k];
    const SymMatrix4 ric_dag = ricci_full(dj);

    const SymMatrix4 N = modified_gravity_tensor(model, gj);
    const Geom geo = geom_from_jet(gj);
    double trN = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) trN += geo.ginv(a, b) * N(a, b);

    const double W2 = model.W2(rho.v);
    for (int k = 0; k < 10; ++k) {
      auto [a, b] = unpack_index(k);
      const double lhs = e2r.v * ric_dag[k] - 6.0 * e2r.v * rho.d1[a] * rho.d1[b] +
                         0.5 * e2r.v * geo.g[k] * W2;
      const double rhs = N[k] - 0.5 * geo.g[k] * trN;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

// centered 4th-order FD in direction mu of a pointwise tensor family
template <class Fn>
SymMatrix4 fd_direction(const Fn& at, const Vec4& x0, int mu, double delta) {
  auto shifted = [&](double s) {
    Vec4 x = x0;
    x[mu] += s;
    return at(x);
  };
  const SymMatrix4 p1 = shifted(delta), m1 = shifted(-delta);
  const SymMatrix4 p2 = shifted(2.0 * delta), m2 = shifted(-2.0 * delta);
  SymMatrix4 r;
  for (int k = 0; k < 10; ++k)
    r[k] = (8.0 * (p1[k] - m1[k]) - (p2[k] - m2[k])) / (12.0 * delta);
  return r;
}

// sup |div N| with the flat-derivation formula nabla^a N_ab at one point
double bianchi_residual(const FRModel& model, const MetricClosure& base, const Vec4& x0,
                        double delta) {
  auto N_at = [&](const Vec4& x) {
    return modified_gravity_tensor(model, evaluate_metric(base, x, 4));
  };
  std::array<SymMatrix4, 4> dN;
  for (int mu = 0; mu < 4; ++mu) dN[mu] = fd_direction(N_at, x0, mu, delta);

  const MetricJet gj = evaluate_metric(base, x0, 2);
  const Geom geo = geom_from_jet(gj);
  const Christoffel G = christoffel(geo);
  const SymMatrix4 N0 = N_at(x0);

  double worst = 0.0;
  for (int b = 0; b < 4; ++b) {
    double div = 0.0;
    for (int g = 0; g < 4; ++g)
      for (int a = 0; a < 4; ++a) {
        double cov = dN[g](a, b);
        for (int d = 0; d < 4; ++d)
          cov -= G(d, g, a) * N0(d, b) + G(d, g, b) * N0(a, d);
        div += geo.ginv(g, a) * cov;
      }
    worst = std::max(worst, std::abs(div));
  }
  return worst;
}

// sup |div_dag N - rhs| for the conformal connection of e^{2 rho} g
double conformal_divergence_residual(const FRModel& model, const MetricClosure& base,
                                     const std::function<Jet4(const std::array<Jet4, 4>&)>& rhofn,
                                     const Vec4& x0, double delta) {
  auto N_at = [&](const Vec4& x) {
    return modified_gravity_tensor(model, evaluate_metric(base, x, 4));
  };
  std::array<SymMatrix4, 4> dN;
  for (int mu = 0; mu < 4; ++mu) dN[mu] = fd_direction(N_at, x0, mu, delta);

  const MetricJet gj = evaluate_metric(base, x0, 2);
  const Geom geo = geom_from_jet(gj);
  const SymMatrix4 N0 = N_at(x0);

  // conformal metric jet and its Christoffels
  std::array<Jet4, 4> X;
  for (int a = 0; a < 4; ++a) X[a] = Jet4::variable(a, x0[a]);
  const Jet4 rho = rhofn(X);
  const Jet4 w = exp(2.0 * rho);
  MetricJet dj;
  dj.order = 2;
  {
    const auto gc = base(X);
    for (int k = 0; k < 10; ++k) dj.c[k] = w * gc[k];
  }
  const Geom dgeo = geom_from_jet(dj);
  const Christoffel Gd = christoffel(dgeo);

  double trN = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) trN += geo.ginv(a, b) * N0(a, b);

  double worst = 0.0;
  for (int b = 0; b < 4; ++b) {
    double div = 0.0;
    for (int g = 0; g < 4; ++g)
      for (int a = 0; a < 4; ++a) {
        double cov = dN[g](a, b);
        for (int d = 0; d < 4; ++d)
          cov -= Gd(d, g, a) * N0(d, b) + Gd(d, g, b) * N0(a, d);
        div += dgeo.ginv(g, a) * cov;
      }
    double rhs = -trN * rho.d1[b];
    for (int g = 0; g < 4; ++g)
      for (int d = 0; d < 4; ++d) rhs += 2.0 * geo.ginv(g, d) * rho.d1[g] * N0(d, b);
    rhs *= std::exp(-2.0 * rho.v);
    worst = std::max(worst, std::abs(div - rhs));
  }
  return worst;
}

double f_invariance_residual(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-0.1, 0.1);
  double worst = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    const MetricClosure base = random_wavy_metric(rng(), 0.1);
    const auto X = point_vars(rng);
    MetricJet jet;
    jet.order = 2;
    jet.c = base(X);
    Geom geo = geom_from_jet(jet);
    const SymMatrix4 F0 = ricci_wave_split(geo).F;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) {
        SymMatrix4 pert;
        for (int k = 0; k < 10; ++k) pert[k] = U(rng);
        geo.d2g[mu][nu] += pert;
        geo.d2g[nu][mu] = geo.d2g[mu][nu];
      }
    const SymMatrix4 F1 = ricci_wave_split(geo).F;
    worst = std::max(worst, (F1 - F0).max_abs());
  }
  return worst;
}

}  // namespace

std::vector<IdentityResult> run_identity_suite(const FRModel& model, unsigned seed,
                                               bool corrupt) {
  std::mt19937_64 rng(seed);
  std::vector<IdentityResult> out;

  {
    IdentityResult r;
    r.name = "conformal_ricci";
    r.threshold = 1e-9;
    r.residual = conformal_ricci_residual(rng, corrupt);
    r.pass = r.residual <= r.threshold;
    out.push_back(r);
  }
  {
    IdentityResult r;
    r.name = "conformal_field_equation";
    r.threshold = 1e-8;
    r.residual = conformal_field_equation_residual(model, rng);
    r.pass = r.residual <= r.threshold;
    out.push_back(r);
  }
  {
    IdentityResult r;
    r.name = "bianchi_divergence";
    r.expected_rate = 4.0;
    const MetricClosure base = random_wavy_metric(rng(), 0.05);
    const Vec4 x0{0.13, -0.27, 0.41, 0.09};
    const double d0 = 0.08;
    const double r1 = bianchi_residual(model, base, x0, d0);
    const double r2 = bianchi_residual(model, base, x0, 0.5 * d0);
    r.residual = r2;
    r.rate = std::log2(r1 / r2);
    r.threshold = 1e-6;
    r.pass = r.residual <= r.threshold &&
             std::abs(r.rate - r.expected_rate) <= 0.15 * r.expected_rate;
    out.push_back(r);
  }
  {
    IdentityResult r;
    r.name = "conformal_divergence";
    r.expected_rate = 4.0;
    std::mt19937_64 rng2(seed + 17);
    const MetricClosure base = random_wavy_metric(rng2(), 0.05);
    const auto rhofn = wavy_scalar(rng2, 0.15);
    const Vec4 x0{-0.21, 0.33, -0.08, 0.17};
    const double d0 = 0.08;
    const double r1 = conformal_divergence_residual(model, base, rhofn, x0, d0);
    const double r2 = conformal_divergence_residual(model, base, rhofn, x0, 0.5 * d0);
    r.residual = r2;
    r.rate = std::log2(r1 / r2);
    r.threshold = 1e-6;
    r.pass = r.residual <= r.threshold &&
             std::abs(r.rate - r.expected_rate) <= 0.15 * r.expected_rate;
    out.push_back(r);
  }
  {
    IdentityResult r;
    r.name = "remainder_first_order";
    r.threshold = 1e-10;
    r.residual = f_invariance_residual(rng);
    r.pass = r.residual <= r.threshold;
    out.push_back(r);
  }
  return out;
}

}  // namespace frlab
