#include "frlab/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace frlab {

namespace {

// evolved scalar fields: 0..9 = h components, 10 = phi, 11 = rho
constexpr int kNumFields = 12;

const GridFunction& field_of(const FieldState& S, int f) {
  if (f < 10) return S.h[f];
  return f == 10 ? S.phi : S.rho;
}
const GridFunction& field_t_of(const FieldState& S, int f) {
  if (f < 10) return S.h_t[f];
  return f == 10 ? S.phi_t : S.rho_t;
}

constexpr int pack3(int a, int b) {
  if (a > b) std::swap(a, b);
  constexpr int off[3] = {0, 3, 5};
  return off[a] + (b - a);
}

// spatial-derivative caches of the evolved fields
struct Cache {
  int dims = 1;
  std::array<std::array<GridFunction, 3>, kNumFields> dx;   // d_a u
  std::array<std::array<GridFunction, 3>, kNumFields> dxt;  // d_a (dt u)
  std::array<std::array<GridFunction, 6>, kNumFields> dxx;  // d_a d_b u, packed
};

Cache build_cache(const FieldState& S, bool with_dxt, bool with_dxx) {
  Cache C;
  C.dims = S.grid().dims;
  for (int f = 0; f < kNumFields; ++f) {
    for (int a = 0; a < C.dims; ++a) {
      C.dx[f][a] = d1(field_of(S, f), a);
      if (with_dxt) C.dxt[f][a] = d1(field_t_of(S, f), a);
      if (with_dxx)
        for (int b = a; b < C.dims; ++b) C.dxx[f][pack3(a, b)] = d2(field_of(S, f), a, b);
    }
  }
  return C;
}

// metric jet of g = m+h at point i: values, first derivatives, and (when
// dxx/dxt/acc supplied) full second derivatives with dtt from acc
Geom point_geom(const FieldState& S, const Cache& C, std::size_t i, const RHSBundle* acc) {
  const int dims = C.dims;
  Geom geo;
  geo.g = minkowski();
  for (int k = 0; k < 10; ++k) geo.g[k] += S.h[k].v[i];
  geo.ginv = invert_sym4(geo.g);
  for (int k = 0; k < 10; ++k) {
    geo.dg[0][k] = S.h_t[k].v[i];
    for (int a = 0; a < dims; ++a) geo.dg[a + 1][k] = C.dx[k][a].v[i];
  }
  if (acc) {
    for (int k = 0; k < 10; ++k) {
      geo.d2g[0][0][k] = acc->h_tt[k].v[i];
      for (int a = 0; a < dims; ++a) {
        geo.d2g[0][a + 1][k] = C.dxt[k][a].v[i];
        geo.d2g[a + 1][0][k] = geo.d2g[0][a + 1][k];
        for (int b = a; b < dims; ++b) {
          geo.d2g[a + 1][b + 1][k] = C.dxx[k][pack3(a, b)].v[i];
          geo.d2g[b + 1][a + 1][k] = geo.d2g[a + 1][b + 1][k];
        }
      }
    }
  }
  return geo;
}

Vec4 point_grad(const FieldState& S, const Cache& C, int f, std::size_t i) {
  Vec4 d{field_t_of(S, f).v[i], 0.0, 0.0, 0.0};
  for (int a = 0; a < C.dims; ++a) d[a + 1] = C.dx[f][a].v[i];
  return d;
}

ScalarJet2 point_jet2(const FieldState& S, const Cache& C, int f, std::size_t i,
                      const RHSBundle& acc) {
  ScalarJet2 j;
  j.v = field_of(S, f).v[i];
  j.d1 = point_grad(S, C, f, i);
  const GridFunction& tt = (f == 10) ? acc.phi_tt : acc.rho_tt;
  j.d2(0, 0) = tt.v[i];
  for (int a = 0; a < C.dims; ++a) {
    j.d2(0, a + 1) = C.dxt[f][a].v[i];
    for (int b = a; b < C.dims; ++b) j.d2(a + 1, b + 1) = C.dxx[f][pack3(a, b)].v[i];
  }
  return j;
}

void check_finite(const RHSBundle& out, double t) {
  auto scan = [t](const GridFunction& u) {
    for (double x : u.v)
      if (!std::isfinite(x)) throw NaNDetected("rhs: non-finite output", t);
  };
  for (const auto& u : out.h_tt) scan(u);
  scan(out.phi_tt);
  scan(out.rho_tt);
}

// `lin` carries the principal second derivatives and the rho mass term;
// `coeff` carries H and all first-order sources. lin == coeff gives the
// nonlinear system.
RHSBundle rhs_core(const FRModel* model, const FieldState& lin, const FieldState& coeff,
                   const Couplings& cpl, double eps0, bool einstein) {
  if (!lin.finite() || !coeff.finite())
    throw NaNDetected("rhs: non-finite input state", lin.t);
  if (lin.max_abs_h() > eps0 || coeff.max_abs_h() > eps0)
    throw CoercivityLost("rhs: ||h||_inf exceeds eps0", lin.t);
  if (!(lin.grid() == coeff.grid())) throw GridMismatch("rhs: coefficient state on another grid");

  const bool same = &lin == &coeff;
  const Cache Cl = build_cache(lin, true, true);
  const Cache Cc = same ? Cache{} : build_cache(coeff, false, false);
  const Cache& Cs = same ? Cl : Cc;

  const int dims = Cl.dims;
  const Grid& g = lin.grid();
  RHSBundle out(g);
  const SymMatrix4 mink = minkowski();

  for (std::size_t i = 0; i < g.size(); ++i) {
    Geom geo = point_geom(coeff, Cs, i, nullptr);
    const SymMatrix4 H = geo.ginv - mink;
    if (std::abs(H(0, 0)) > 0.5)
      throw CoercivityLost("rhs: |H^00| > 1/2", lin.t);

    const RicciSplit sp = ricci_wave_split(geo);  // d2g = 0, so F only costs first order

    const Vec4 dphi = point_grad(coeff, Cs, 10, i);
    const bool rho_coupled = !einstein && cpl.kappa_terms;
    Vec4 drho{};
    double rhov = 0.0;
    if (rho_coupled) {
      drho = point_grad(coeff, Cs, 11, i);
      rhov = coeff.rho.v[i];
    }

    double Vh = 0.0, Vr = 0.0, mass = 0.0;
    if (rho_coupled) {
      Vh = model->V_h(rhov) / model->kappa;
      Vr = model->V_rho(rhov) / model->kappa;
      mass = lin.rho.v[i] / (3.0 * model->kappa);
    }

    double gpp = 0.0, gpr = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        gpp += geo.ginv(a, b) * dphi[a] * dphi[b];
        gpr += geo.ginv(a, b) * dphi[a] * drho[b];
      }

    const double A = 1.0 / (1.0 - H(0, 0));
    auto solve = [&](int f, double Su) {
      double s = -Su;
      for (int a = 0; a < dims; ++a) {
        for (int b = 0; b < dims; ++b)
          s += ((a == b ? 1.0 : 0.0) + H(a + 1, b + 1)) * Cl.dxx[f][pack3(a, b)].v[i];
        s += 2.0 * H(0, a + 1) * Cl.dxt[f][a].v[i];
      }
      return A * s;
    };

    for (int k = 0; k < 10; ++k) {
      auto [ia, ib] = unpack_index(k);
      const double Sh = sp.F[k] - cpl.wave_matter * dphi[ia] * dphi[ib] -
                        12.0 * drho[ia] * drho[ib] - Vh * geo.g[k];
      out.h_tt[k].v[i] = solve(k, Sh);
    }
    out.phi_tt.v[i] = solve(10, rho_coupled ? 2.0 * gpr : 0.0);
    if (einstein) {
      out.rho_tt.v[i] = 0.0;
    } else {
      const double Srho = mass + Vr - cpl.rho_matter * std::exp(-2.0 * rhov) * gpp;
      out.rho_tt.v[i] = solve(11, Srho);
    }
  }

  check_finite(out, lin.t);
  return out;
}

}  // namespace

RHSBundle rhs_augmented(const FRModel& model, const FieldState& S, const Couplings& cpl,
                        double eps0) {
  return rhs_core(&model, S, S, cpl, eps0, false);
}

RHSBundle rhs_einstein(const FieldState& S, const Couplings& cpl, double eps0) {
  return rhs_core(nullptr, S, S, cpl, eps0, true);
}

RHSBundle rhs_frozen(const FRModel& model, const FieldState& lin, const FieldState& coeff,
                     const Couplings& cpl, double eps0) {
  return rhs_core(&model, lin, coeff, cpl, eps0, false);
}

std::array<GridFunction, 4> gauge_residual(const FieldState& S) {
  const Cache C = build_cache(S, false, false);
  const Grid& g = S.grid();
  std::array<GridFunction, 4> out{GridFunction(g, "gauge0"), GridFunction(g, "gauge1"),
                                  GridFunction(g, "gauge2"), GridFunction(g, "gauge3")};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Geom geo = point_geom(S, C, i, nullptr);
    const GammaVector gv = gamma_contracted(geo);
    for (int l = 0; l < 4; ++l) out[l].v[i] = gv.up[l];
  }
  return out;
}

GridFunction augmentation_residual(const FRModel& model, const FieldState& S,
                                   const RHSBundle& acc) {
  const Cache C = build_cache(S, true, true);
  const Grid& g = S.grid();
  GridFunction out(g, "augmentation");
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Geom dag = point_geom(S, C, i, &acc);  // conformal metric m+h
    const ScalarJet2 rj = point_jet2(S, C, 11, i, acc);
    const double w = std::exp(-2.0 * rj.v);  // physical metric g = w (m+h)

    Geom phys;
    for (int k = 0; k < 10; ++k) phys.g[k] = w * dag.g[k];
    phys.ginv = dag.ginv;
    phys.ginv *= 1.0 / w;
    for (int mu = 0; mu < 4; ++mu)
      for (int k = 0; k < 10; ++k)
        phys.dg[mu][k] = w * (dag.dg[mu][k] - 2.0 * rj.d1[mu] * dag.g[k]);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) {
        SymMatrix4 dd;
        for (int k = 0; k < 10; ++k)
          dd[k] = w * (dag.d2g[mu][nu][k] +
                       (4.0 * rj.d1[mu] * rj.d1[nu] - 2.0 * rj.d2(mu, nu)) * dag.g[k] -
                       2.0 * rj.d1[mu] * dag.dg[nu][k] - 2.0 * rj.d1[nu] * dag.dg[mu][k]);
        phys.d2g[mu][nu] = dd;
        phys.d2g[nu][mu] = dd;
      }

    const SymMatrix4 ric = ricci_full(phys);
    double Rg = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) Rg += phys.ginv(a, b) * ric(a, b);

    out.v[i] = std::exp(2.0 * rj.v) - model.f_prime(Rg);
  }
  return out;
}

GridFunction augmentation_residual(const FRModel& model, const FieldState& S) {
  return augmentation_residual(model, S, rhs_augmented(model, S));
}

GridFunction matter_wave_residual(const FieldState& S, const RHSBundle& acc) {
  const Cache C = build_cache(S, true, true);
  const Grid& g = S.grid();
  GridFunction out(g, "matter_wave");
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Geom geo = point_geom(S, C, i, &acc);
    const ScalarJet2 pj = point_jet2(S, C, 10, i, acc);
    const Vec4 drho = point_grad(S, C, 11, i);
    double gpr = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) gpr += geo.ginv(a, b) * pj.d1[a] * drho[b];
    out.v[i] = box_scalar(geo, pj) - 2.0 * gpr;
  }
  return out;
}

namespace {

// 3x3 symmetric helpers for the slice geometry
struct Sym3 {
  std::array<double, 6> a{};  // 00,01,02,11,12,22
  static constexpr int index(int i, int j) {
    if (i > j) std::swap(i, j);
    constexpr int off[3] = {0, 3, 5};
    return off[i] + (j - i);
  }
  double& operator()(int i, int j) { return a[index(i, j)]; }
  double operator()(int i, int j) const { return a[index(i, j)]; }
};

Sym3 invert_sym3(const Sym3& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(0, 2);
  const double d = m(1, 1), e = m(1, 2), f = m(2, 2);
  const double det = a * (d * f - e * e) - b * (b * f - c * e) + c * (b * e - c * d);
  if (!(det > 0.0)) throw NonSpacelikeSlice("slice 3-metric not positive definite");
  Sym3 r;
  r(0, 0) = (d * f - e * e) / det;
  r(0, 1) = (c * e - b * f) / det;
  r(0, 2) = (b * e - c * d) / det;
  r(1, 1) = (a * f - c * c) / det;
  r(1, 2) = (b * c - a * e) / det;
  r(2, 2) = (a * d - b * b) / det;
  return r;
}

}  // namespace

ConstraintResiduals constraint_residuals(const FRModel& model, const FieldState& S,
                                         const Couplings& cpl) {
  const Cache C = build_cache(S, false, true);
  const int dims = C.dims;
  const Grid& g = S.grid();
  ConstraintResiduals out{GridFunction(g, "hamiltonian"),
                          {GridFunction(g, "momentum1"), GridFunction(g, "momentum2"),
                           GridFunction(g, "momentum3")}};

  // pass 1: pointwise slice geometry; store K^i_j and tr K for pass 2
  std::array<GridFunction, 9> Kmix;  // K^i_j at [3*i+j]
  for (auto& u : Kmix) u = GridFunction(g);
  GridFunction trK(g);

  auto slice_geometry = [&](std::size_t i, Sym3& gbar, Sym3& gbar_inv, double& lapse,
                            std::array<double, 3>& beta_up, Sym3& K) {
    SymMatrix4 g4 = minkowski();
    for (int k = 0; k < 10; ++k) g4[k] += S.h[k].v[i];
    const SymMatrix4 gi = invert_sym4(g4);
    if (!(gi(0, 0) < 0.0)) throw NonSpacelikeSlice("slice: g^00 not negative");
    lapse = std::sqrt(-1.0 / gi(0, 0));

    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) gbar(a, b) = g4(a + 1, b + 1);
    gbar_inv = invert_sym3(gbar);

    std::array<double, 3> beta_dn{};
    for (int a = 0; a < 3; ++a) beta_dn[a] = g4(0, a + 1);
    for (int a = 0; a < 3; ++a) {
      beta_up[a] = 0.0;
      for (int b = 0; b < 3; ++b) beta_up[a] += gbar_inv(a, b) * beta_dn[b];
    }

    // spatial derivatives of gbar and beta
    std::array<Sym3, 3> dgbar{};
    for (int axis = 0; axis < dims; ++axis)
      for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b)
          dgbar[axis](a, b) = C.dx[SymMatrix4::index(a + 1, b + 1)][axis].v[i];
    std::array<std::array<double, 3>, 3> dbeta_up{};  // d_axis beta^k
    for (int axis = 0; axis < dims; ++axis) {
      // d gbar^{kb} = -gbar^{km} gbar^{bl} d gbar_{ml}
      Sym3 dginv{};
      for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
          double s = 0.0;
          for (int mm = 0; mm < 3; ++mm)
            for (int ll = 0; ll < 3; ++ll)
              s += gbar_inv(a, mm) * gbar_inv(b, ll) * dgbar[axis](mm, ll);
          dginv(a, b) = -s;
        }
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int b = 0; b < 3; ++b) {
          const double dbeta_dn = C.dx[SymMatrix4::index(0, b + 1)][axis].v[i];
          s += dginv(k, b) * beta_dn[b] + gbar_inv(k, b) * dbeta_dn;
        }
        dbeta_up[axis][k] = s;
      }
    }

    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) {
        double lie = S.h_t[SymMatrix4::index(a + 1, b + 1)].v[i];
        for (int k = 0; k < dims; ++k) lie -= beta_up[k] * dgbar[k](a, b);
        for (int k = 0; k < 3; ++k) {
          const double dka = (a < dims) ? dbeta_up[a][k] : 0.0;
          const double dkb = (b < dims) ? dbeta_up[b][k] : 0.0;
          lie -= gbar(k, b) * dka + gbar(a, k) * dkb;
        }
        K(a, b) = -lie / (2.0 * lapse);
      }
  };

  for (std::size_t i = 0; i < g.size(); ++i) {
    Sym3 gbar, gbar_inv, K;
    double lapse;
    std::array<double, 3> beta_up;
    slice_geometry(i, gbar, gbar_inv, lapse, beta_up, K);
    double tr = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) tr += gbar_inv(a, b) * K(a, b);
    trK.v[i] = tr;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double s = 0.0;
        for (int c = 0; c < 3; ++c) s += gbar_inv(a, c) * K(c, b);
        Kmix[3 * a + b].v[i] = s;
      }
  }

  // spatial derivatives of the mixed extrinsic curvature and its trace
  std::array<std::array<GridFunction, 3>, 9> dKmix;
  std::array<GridFunction, 3> dtrK;
  for (int axis = 0; axis < dims; ++axis) {
    dtrK[axis] = d1(trK, axis);
    for (int c = 0; c < 9; ++c) dKmix[c][axis] = d1(Kmix[c], axis);
  }

  // pass 2: assemble the residuals
  for (std::size_t i = 0; i < g.size(); ++i) {
    Sym3 gbar, gbar_inv, K;
    double lapse;
    std::array<double, 3> beta_up;
    slice_geometry(i, gbar, gbar_inv, lapse, beta_up, K);

    // 3-Christoffels and 3-Ricci scalar from spatial derivatives of gbar
    std::array<Sym3, 3> dgbar{};
    std::array<std::array<Sym3, 3>, 3> ddgbar{};
    for (int axis = 0; axis < dims; ++axis)
      for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b)
          dgbar[axis](a, b) = C.dx[SymMatrix4::index(a + 1, b + 1)][axis].v[i];
    for (int ax = 0; ax < dims; ++ax)
      for (int bx = 0; bx < dims; ++bx)
        for (int a = 0; a < 3; ++a)
          for (int b = a; b < 3; ++b)
            ddgbar[ax][bx](a, b) = C.dxx[SymMatrix4::index(a + 1, b + 1)][pack3(ax, bx)].v[i];

    double Gbar[3][3][3];  // Gbar[k][a][b] = Gammabar^k_{ab}
    for (int k = 0; k < 3; ++k)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          double s = 0.0;
          for (int l = 0; l < 3; ++l) {
            const double da = a < dims ? dgbar[a](b, l) : 0.0;
            const double db = b < dims ? dgbar[b](a, l) : 0.0;
            const double dl = l < dims ? dgbar[l](a, b) : 0.0;
            s += gbar_inv(k, l) * (da + db - dl);
          }
          Gbar[k][a][b] = 0.5 * s;
        }

    // Rbar_{ab} needs d_c Gbar; assemble from dginv and ddgbar
    double dGbar[3][3][3][3];  // d_mu Gbar[k][a][b]
    for (int mu = 0; mu < 3; ++mu) {
      Sym3 dginv{};
      if (mu < dims)
        for (int a = 0; a < 3; ++a)
          for (int b = a; b < 3; ++b) {
            double s = 0.0;
            for (int mm = 0; mm < 3; ++mm)
              for (int ll = 0; ll < 3; ++ll)
                s += gbar_inv(a, mm) * gbar_inv(b, ll) * dgbar[mu](mm, ll);
            dginv(a, b) = -s;
          }
      for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            double s = 0.0;
            for (int l = 0; l < 3; ++l) {
              const double da = a < dims ? dgbar[a](b, l) : 0.0;
              const double db = b < dims ? dgbar[b](a, l) : 0.0;
              const double dl = l < dims ? dgbar[l](a, b) : 0.0;
              s += (mu < dims ? dginv(k, l) : 0.0) * (da + db - dl);
              const double dda = (a < dims && mu < dims) ? ddgbar[mu][a](b, l) : 0.0;
              const double ddb = (b < dims && mu < dims) ? ddgbar[mu][b](a, l) : 0.0;
              const double ddl = (l < dims && mu < dims) ? ddgbar[mu][l](a, b) : 0.0;
              s += gbar_inv(k, l) * (dda + ddb - ddl);
            }
            dGbar[mu][k][a][b] = 0.5 * s;
          }
    }

    double Rbar = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double Rab = 0.0;
        for (int l = 0; l < 3; ++l) {
          Rab += (l < dims ? dGbar[l][l][a][b] : 0.0) - (a < dims ? dGbar[a][l][l][b] : 0.0);
          for (int d = 0; d < 3; ++d)
            Rab += Gbar[l][l][d] * Gbar[d][a][b] - Gbar[l][a][d] * Gbar[d][l][b];
        }
        Rbar += gbar_inv(a, b) * Rab;
      }

    // matter projections on the slice
    const double rhov = S.rho.v[i];
    const double e2r = std::exp(2.0 * rhov);
    auto normal_deriv = [&](int f) {
      double s = field_t_of(S, f).v[i];
      for (int a = 0; a < dims; ++a) s -= beta_up[a] * C.dx[f][a].v[i];
      return s / lapse;
    };
    const double phi1 = normal_deriv(10);
    const double rho1 = normal_deriv(11);
    double gradphi2 = 0.0, gradrho2 = 0.0;
    for (int a = 0; a < dims; ++a)
      for (int b = 0; b < dims; ++b) {
        gradphi2 += gbar_inv(a, b) * C.dx[10][a].v[i] * C.dx[10][b].v[i];
        gradrho2 += gbar_inv(a, b) * C.dx[11][a].v[i] * C.dx[11][b].v[i];
      }

    double KK = 0.0, tr = trK.v[i];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) KK += Kmix[3 * a + b].v[i] * Kmix[3 * b + a].v[i];

    out.hamiltonian.v[i] =
        Rbar - KK + tr * tr -
        (cpl.constraint_matter / e2r * (phi1 * phi1 + gradphi2) + 6.0 * rho1 * rho1 +
         6.0 * gradrho2 - model.W2(rhov) / e2r);

    for (int j = 0; j < 3; ++j) {
      double mom = (j < dims) ? dtrK[j].v[i] : 0.0;
      // div K^i_j = d_i K^i_j + Gbar^i_{il} K^l_j - Gbar^l_{ij} K^i_l
      double div = 0.0;
      for (int a = 0; a < 3; ++a) {
        if (a < dims) div += dKmix[3 * a + j][a].v[i];
        for (int l = 0; l < 3; ++l)
          div += Gbar[a][a][l] * Kmix[3 * l + j].v[i] - Gbar[l][a][j] * Kmix[3 * a + l].v[i];
      }
      mom -= div;
      const double dphi_j = j < dims ? C.dx[10][j].v[i] : 0.0;
      const double drho_j = j < dims ? C.dx[11][j].v[i] : 0.0;
      out.momentum[j].v[i] = mom - (phi1 * dphi_j / e2r + 6.0 * rho1 * drho_j);
    }
  }
  return out;
}

namespace {

void norms_of(const GridFunction& u, double& l2, double& sup) {
  const double cell = std::pow(u.grid.h(), u.grid.dims);
  double s2 = 0.0, m = 0.0;
  for (double x : u.v) {
    s2 += x * x;
    m = std::max(m, std::abs(x));
  }
  l2 = std::sqrt(cell * s2);
  sup = m;
}

}  // namespace

ResidualReport residual_report(const FRModel& model, const FieldState& S, const RHSBundle& acc,
                               const Couplings& cpl) {
  ResidualReport r;
  r.t = S.t;
  const auto gr = gauge_residual(S);
  for (int l = 0; l < 4; ++l) norms_of(gr[l], r.gauge_l2[l], r.gauge_sup[l]);
  const GridFunction ar = augmentation_residual(model, S, acc);
  norms_of(ar, r.aug_l2, r.aug_sup);
  const ConstraintResiduals cr = constraint_residuals(model, S, cpl);
  norms_of(cr.hamiltonian, r.ham_l2, r.ham_sup);
  for (int j = 0; j < 3; ++j) norms_of(cr.momentum[j], r.mom_l2[j], r.mom_sup[j]);
  const GridFunction mw = matter_wave_residual(S, acc);
  norms_of(mw, r.matter_l2, r.matter_sup);
  return r;
}

}  // namespace frlab
