#include "frlab/tensor.hpp"

#include <cmath>

namespace frlab {

Geom geom_from_jet(const MetricJet& jet) {
  Geom geo;
  geo.g = jet.value();
  geo.ginv = invert_sym4(geo.g);
  for (int mu = 0; mu < 4; ++mu) geo.dg[mu] = jet.d1(mu);
  if (jet.order >= 2) {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) {
        geo.d2g[mu][nu] = jet.d2(mu, nu);
        geo.d2g[nu][mu] = geo.d2g[mu][nu];
      }
  }
  return geo;
}

SymMatrix4 h_to_H(const SymMatrix4& h, double eps0) {
  if (h.max_abs() > eps0)
    throw PerturbationTooLarge("h_to_H: ||h||_inf exceeds admissible bound");
  const SymMatrix4 m = minkowski();
  // m^{-1} = m for diag(-1,1,1,1)
  return invert_sym4(m + h) - m;
}

SymMatrix4 stress_energy_jordan(const SymMatrix4& g, const Vec4& dphi) {
  const SymMatrix4 gi = invert_sym4(g);
  double grad2 = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) grad2 += gi(a, b) * dphi[a] * dphi[b];
  SymMatrix4 T;
  for (int k = 0; k < 10; ++k) {
    auto [i, j] = unpack_index(k);
    T[k] = dphi[i] * dphi[j] - 0.5 * g[k] * grad2;
  }
  return T;
}

Christoffel christoffel(const Geom& geo) {
  Christoffel G;
  for (int gamma = 0; gamma < 4; ++gamma)
    for (int k = 0; k < 10; ++k) {
      auto [a, b] = unpack_index(k);
      double s = 0.0;
      for (int l = 0; l < 4; ++l)
        s += geo.ginv(gamma, l) * (geo.dg[a](b, l) + geo.dg[b](a, l) - geo.dg[l](a, b));
      G.g[gamma][k] = 0.5 * s;
    }
  return G;
}

std::array<SymMatrix4, 4> dginv(const Geom& geo) {
  std::array<SymMatrix4, 4> r{};
  for (int mu = 0; mu < 4; ++mu)
    for (int k = 0; k < 10; ++k) {
      auto [a, b] = unpack_index(k);
      double s = 0.0;
      for (int ap = 0; ap < 4; ++ap)
        for (int bp = 0; bp < 4; ++bp)
          s += geo.ginv(a, ap) * geo.ginv(b, bp) * geo.dg[mu](ap, bp);
      r[mu][k] = -s;
    }
  return r;
}

namespace {

// dGamma[mu][gamma][packed ab] = d_mu Gamma^gamma_{ab}
using DChristoffel = std::array<Christoffel, 4>;

DChristoffel d_christoffel(const Geom& geo, const std::array<SymMatrix4, 4>& dgi) {
  DChristoffel dG{};
  for (int mu = 0; mu < 4; ++mu)
    for (int gamma = 0; gamma < 4; ++gamma)
      for (int k = 0; k < 10; ++k) {
        auto [a, b] = unpack_index(k);
        double s = 0.0;
        for (int l = 0; l < 4; ++l) {
          s += dgi[mu](gamma, l) * (geo.dg[a](b, l) + geo.dg[b](a, l) - geo.dg[l](a, b));
          s += geo.ginv(gamma, l) *
               (geo.d2g[mu][a](b, l) + geo.d2g[mu][b](a, l) - geo.d2g[mu][l](a, b));
        }
        dG[mu].g[gamma][k] = 0.5 * s;
      }
  return dG;
}

SymMatrix4 ricci_from(const Geom& geo, const Christoffel& G, const DChristoffel& dG) {
  SymMatrix4 R;
  for (int k = 0; k < 10; ++k) {
    auto [a, b] = unpack_index(k);
    double s = 0.0;
    for (int l = 0; l < 4; ++l) {
      s += dG[l](l, a, b) - dG[a](l, l, b);
      for (int d = 0; d < 4; ++d) s += G(l, l, d) * G(d, a, b) - G(l, a, d) * G(d, l, b);
    }
    R[k] = s;
  }
  return R;
}

}  // namespace

SymMatrix4 ricci_full(const Geom& geo) {
  const Christoffel G = christoffel(geo);
  const DChristoffel dG = d_christoffel(geo, dginv(geo));
  return ricci_from(geo, G, dG);
}

GammaVector gamma_contracted(const Geom& geo) {
  const Christoffel G = christoffel(geo);
  GammaVector gv;
  for (int l = 0; l < 4; ++l) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) s += geo.ginv(a, b) * G(l, a, b);
    gv.up[l] = s;
  }
  for (int b = 0; b < 4; ++b) {
    double s = 0.0;
    for (int g = 0; g < 4; ++g) s += geo.g(b, g) * gv.up[g];
    gv.down[b] = s;
  }
  return gv;
}

RicciSplit ricci_wave_split(const Geom& geo) {
  const std::array<SymMatrix4, 4> dgi = dginv(geo);
  const Christoffel G = christoffel(geo);
  const DChristoffel dG = d_christoffel(geo, dgi);
  const SymMatrix4 ricci = ricci_from(geo, G, dG);

  RicciSplit r;
  for (int k = 0; k < 10; ++k) {
    auto [a, b] = unpack_index(k);
    double s = 0.0;
    for (int ap = 0; ap < 4; ++ap)
      for (int bp = 0; bp < 4; ++bp) s += geo.ginv(ap, bp) * geo.d2g[ap][bp](a, b);
    r.principal[k] = -0.5 * s;
  }

  // Gamma^l and its derivatives, then Gamma_b = g_{bg} Gamma^g
  Vec4 Gup{};
  for (int l = 0; l < 4; ++l)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) Gup[l] += geo.ginv(a, b) * G(l, a, b);
  std::array<Vec4, 4> dGup{};  // dGup[mu][l]
  for (int mu = 0; mu < 4; ++mu)
    for (int l = 0; l < 4; ++l)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          dGup[mu][l] += dgi[mu](a, b) * G(l, a, b) + geo.ginv(a, b) * dG[mu](l, a, b);
  std::array<Vec4, 4> dGdown{};  // dGdown[mu][b] = d_mu Gamma_b
  for (int mu = 0; mu < 4; ++mu)
    for (int b = 0; b < 4; ++b)
      for (int g = 0; g < 4; ++g)
        dGdown[mu][b] += geo.dg[mu](b, g) * Gup[g] + geo.g(b, g) * dGup[mu][g];

  for (int k = 0; k < 10; ++k) {
    auto [a, b] = unpack_index(k);
    r.gauge[k] = 0.5 * (dGdown[a][b] + dGdown[b][a]);
  }

  // F by subtraction: exact reassembly principal + gauge + F/2 == ricci_full
  r.F = 2.0 * (ricci - r.principal - r.gauge);
  return r;
}

SymMatrix4 ricci_first_order_part(const Geom& geo) {
  Geom g0 = geo;
  for (auto& row : g0.d2g)
    for (auto& m : row) m = SymMatrix4{};
  // with dd g = 0, principal vanishes and gauge keeps only its dg x dg part
  RicciSplit s = ricci_wave_split(g0);
  return s.F;
}

double box_scalar(const Geom& geo, const ScalarJet2& u) {
  const Christoffel G = christoffel(geo);
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double hess = u.d2(a, b);
      for (int l = 0; l < 4; ++l) hess -= G(l, a, b) * u.d1[l];
      s += geo.ginv(a, b) * hess;
    }
  return s;
}

namespace {

Jet4 jet_det3(const std::array<std::array<Jet4, 4>, 4>& m, const int r[3], const int c[3]) {
  return m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]]) -
         m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]]) +
         m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]]);
}

std::array<std::array<Jet4, 4>, 4> jet_full(const std::array<Jet4, 10>& g) {
  std::array<std::array<Jet4, 4>, 4> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = g[SymMatrix4::index(i, j)];
  return m;
}

}  // namespace

std::array<Jet4, 10> jet_metric_inverse(const std::array<Jet4, 10>& g) {
  const auto m = jet_full(g);
  Jet4 det = Jet4::constant(0.0);
  for (int c = 0; c < 4; ++c) {
    int rows[3], cols[3];
    int rr = 0;
    for (int r = 1; r < 4; ++r) rows[rr++] = r;
    int cc = 0;
    for (int c2 = 0; c2 < 4; ++c2)
      if (c2 != c) cols[cc++] = c2;
    Jet4 sub = jet_det3(m, rows, cols);
    Jet4 term = m[0][c] * sub;
    if (c % 2 == 1) term = -term;
    det += term;
  }
  if (std::abs(det.v) <= 1e-14)
    throw SingularMetric("jet_metric_inverse: determinant below tolerance");
  const Jet4 idet = recip(det);

  std::array<Jet4, 10> inv;
  for (int k = 0; k < 10; ++k) {
    auto [i, j] = unpack_index(k);
    int rows[3], cols[3];
    int rr = 0;
    for (int r = 0; r < 4; ++r)
      if (r != i) rows[rr++] = r;
    int cc = 0;
    for (int c = 0; c < 4; ++c)
      if (c != j) cols[cc++] = c;
    Jet4 cof = jet_det3(m, rows, cols);
    if ((i + j) % 2 == 1) cof = -cof;
    inv[k] = cof * idet;
  }
  return inv;
}

std::array<Jet4, 10> jet_ricci(const std::array<Jet4, 10>& g) {
  const std::array<Jet4, 10> gi = jet_metric_inverse(g);

  // Gamma^gamma_{ab}; valid to one order below the input jets
  std::array<std::array<Jet4, 10>, 4> Gm;
  std::array<std::array<Jet4, 4>, 10> dg;  // dg[k][mu] = d_mu g_k
  for (int k = 0; k < 10; ++k)
    for (int mu = 0; mu < 4; ++mu) dg[k][mu] = jet_deriv(g[k], mu);
  auto dgc = [&](int a, int b, int mu) -> const Jet4& { return dg[SymMatrix4::index(a, b)][mu]; };
  for (int gamma = 0; gamma < 4; ++gamma)
    for (int k = 0; k < 10; ++k) {
      auto [a, b] = unpack_index(k);
      Jet4 s = Jet4::constant(0.0);
      for (int l = 0; l < 4; ++l)
        s += gi[SymMatrix4::index(gamma, l)] * (dgc(b, l, a) + dgc(a, l, b) - dgc(a, b, l));
      Gm[gamma][k] = 0.5 * s;
    }

  std::array<Jet4, 10> R;
  for (int k = 0; k < 10; ++k) {
    auto [a, b] = unpack_index(k);
    Jet4 s = Jet4::constant(0.0);
    for (int l = 0; l < 4; ++l) {
      s += jet_deriv(Gm[l][SymMatrix4::index(a, b)], l);
      s -= jet_deriv(Gm[l][SymMatrix4::index(l, b)], a);
      for (int d = 0; d < 4; ++d)
        s += Gm[l][SymMatrix4::index(l, d)] * Gm[d][SymMatrix4::index(a, b)] -
             Gm[l][SymMatrix4::index(a, d)] * Gm[d][SymMatrix4::index(l, b)];
    }
    R[k] = s;
  }
  return R;
}

Jet4 scalar_curvature_jet(const MetricJet& jet) {
  const std::array<Jet4, 10> gi = jet_metric_inverse(jet.c);
  const std::array<Jet4, 10> R = jet_ricci(jet.c);
  Jet4 s = Jet4::constant(0.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      s += gi[SymMatrix4::index(a, b)] * R[SymMatrix4::index(a, b)];
  return s;
}

SymMatrix4 modified_gravity_tensor(const FRModel& model, const MetricJet& jet) {
  const Jet4 R = scalar_curvature_jet(jet);  // value, gradient, Hessian valid
  const Jet4 fp = model.kappa * R + 1.0;
  if (fp.v <= 0.0)
    throw NonPositiveConformalFactor("modified_gravity_tensor: 1 + kappa R <= 0");

  const Geom geo = geom_from_jet(jet);
  const Christoffel G = christoffel(geo);

  // nabla_a nabla_b f' and Box_g f'
  SymMatrix4 hess;
  for (int k = 0; k < 10; ++k) {
    auto [a, b] = unpack_index(k);
    double h = fp.g2(a, b);
    for (int l = 0; l < 4; ++l) h -= G(l, a, b) * fp.d1[l];
    hess[k] = h;
  }
  double box = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) box += geo.ginv(a, b) * hess(a, b);

  const SymMatrix4 ricci = ricci_full(geo);
  const double Rv = R.v;
  const double fv = model.f(Rv);
  const double fpv = fp.v;

  SymMatrix4 N;
  for (int k = 0; k < 10; ++k) {
    auto [a, b] = unpack_index(k);
    const double Gab = ricci(a, b) - 0.5 * Rv * geo.g(a, b);
    N[k] = fpv * Gab - 0.5 * (fv - Rv * fpv) * geo.g(a, b) + geo.g(a, b) * box - hess(a, b);
  }
  return N;
}

}  // namespace frlab
