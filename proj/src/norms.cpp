#include "frlab/norms.hpp"

#include <cmath>

#include "frlab/sym4.hpp"

namespace frlab {

double l2_norm(const GridFunction& u) {
  const double cell = std::pow(u.grid.h(), u.grid.dims);
  double s = 0.0;
  for (double x : u.v) s += x * x;
  return std::sqrt(cell * s);
}

std::vector<GridFunction> derivative_family(const GridFunction& u, int d) {
  std::vector<GridFunction> out;
  const int dims = u.grid.dims;
  if (dims == 1) {
    out.push_back(u);
    for (int k = 1; k <= d; ++k) out.push_back(d1(out.back(), 0));
    return out;
  }
  // multi-indices (a1,a2,a3,b1,b2,b3), derivatives then rotations, total <= d
  const int gens[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  std::array<int, 6> idx{};
  auto total = [&idx]() { return idx[0] + idx[1] + idx[2] + idx[3] + idx[4] + idx[5]; };
  while (true) {
    if (total() <= d) {
      GridFunction w = u;
      for (int g = 0; g < 3; ++g)
        for (int r = 0; r < idx[3 + g]; ++r) w = omega_apply(w, gens[g][0], gens[g][1]);
      for (int a = 0; a < 3; ++a)
        for (int r = 0; r < idx[a]; ++r) w = d1(w, a);
      out.push_back(std::move(w));
    }
    // odometer over [0..d]^6
    int p = 0;
    while (p < 6 && ++idx[p] > d) idx[p++] = 0;
    if (p == 6) break;
  }
  return out;
}

double x_norm(const GridFunction& u, int d) {
  double s = 0.0;
  for (const auto& w : derivative_family(u, d)) s += l2_norm(w);
  return s;
}

double xp_norm(const GridFunction& u, int d) {
  const int dims = u.grid.dims;
  const double cell = std::pow(u.grid.h(), dims);
  double s = 0.0;
  for (const auto& w : derivative_family(u, d)) {
    std::array<GridFunction, 3> dw;
    for (int a = 0; a < dims; ++a) dw[a] = d1(w, a);
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      double g2 = 0.0;
      for (int a = 0; a < dims; ++a) g2 += dw[a].v[i] * dw[a].v[i];
      acc += g2;
    }
    s += std::sqrt(cell * acc);
  }
  return s;
}

double e_minus1(const GridFunction& u) {
  double m = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    m = std::max(m, (1.0 + radius_at(u.grid, i)) * std::abs(u.v[i]));
  return m;
}

double x_h_norm(const GridFunction& u, int d) { return e_minus1(u) + xp_norm(u, d); }

namespace {

double energy_impl(const std::array<GridFunction, 10>& h, const GridFunction& u,
                   const GridFunction& ut, double c) {
  const Grid& g = u.grid;
  const int dims = g.dims;
  const double cell = std::pow(g.h(), dims);
  std::array<GridFunction, 3> du;
  for (int a = 0; a < dims; ++a) du[a] = d1(u, a);

  const SymMatrix4 mink = minkowski();
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    SymMatrix4 gm = mink;
    for (int k = 0; k < 10; ++k) gm[k] += h[k].v[i];
    const SymMatrix4 gi = invert_sym4(gm);
    if (!(-gi(0, 0) > 0.0)) throw CoercivityLost("energy: g^00 not negative");
    // spatial block positive definite (leading minors)
    const double m1 = gi(1, 1);
    const double m2 = gi(1, 1) * gi(2, 2) - gi(1, 2) * gi(1, 2);
    const double m3 = gi(1, 1) * (gi(2, 2) * gi(3, 3) - gi(2, 3) * gi(2, 3)) -
                      gi(1, 2) * (gi(1, 2) * gi(3, 3) - gi(2, 3) * gi(1, 3)) +
                      gi(1, 3) * (gi(1, 2) * gi(2, 3) - gi(2, 2) * gi(1, 3));
    if (!(m1 > 0.0 && m2 > 0.0 && m3 > 0.0))
      throw CoercivityLost("energy: spatial block not positive definite");

    double q = -gi(0, 0) * ut.v[i] * ut.v[i] + c * c * u.v[i] * u.v[i];
    for (int a = 0; a < dims; ++a)
      for (int b = 0; b < dims; ++b) q += gi(a + 1, b + 1) * du[a].v[i] * du[b].v[i];
    acc += q;
  }
  return std::sqrt(cell * acc);
}

}  // namespace

double energy(const std::array<GridFunction, 10>& h, const GridFunction& u,
              const GridFunction& ut) {
  return energy_impl(h, u, ut, 0.0);
}

double energy_c(const std::array<GridFunction, 10>& h, const GridFunction& u,
                const GridFunction& ut, double c) {
  return energy_impl(h, u, ut, c);
}

double energy_d(const std::array<GridFunction, 10>& h, const GridFunction& u,
                const GridFunction& ut, int d) {
  const auto fu = derivative_family(u, d);
  const auto fut = derivative_family(ut, d);
  double s = 0.0;
  for (std::size_t k = 0; k < fu.size(); ++k) s += energy_impl(h, fu[k], fut[k], 0.0);
  return s;
}

double e_p_norm(const GridFunction& u, const GridFunction& ut, int d) {
  const int dims = u.grid.dims;
  const double cell = std::pow(u.grid.h(), dims);
  const auto fu = derivative_family(u, d);
  const auto fut = derivative_family(ut, d);
  double s = 0.0;
  for (std::size_t k = 0; k < fu.size(); ++k) {
    std::array<GridFunction, 3> dw;
    for (int a = 0; a < dims; ++a) dw[a] = d1(fu[k], a);
    double acc = 0.0;
    for (std::size_t i = 0; i < fu[k].size(); ++i) {
      double g2 = fut[k].v[i] * fut[k].v[i];
      for (int a = 0; a < dims; ++a) g2 += dw[a].v[i] * dw[a].v[i];
      acc += g2;
    }
    s += std::sqrt(cell * acc);
  }
  return s;
}

double e_h_norm(const GridFunction& u, const GridFunction& ut, int d) {
  return e_minus1(u) + e_p_norm(u, ut, d);
}

double comparison_distance(const FieldState& a, const FieldState& b, int d) {
  if (!(a.grid() == b.grid())) throw GridMismatch("comparison_distance: different grids");
  double s = 0.0;
  for (int k = 0; k < 10; ++k) s += e_h_norm(a.h[k] - b.h[k], a.h_t[k] - b.h_t[k], d);
  s += e_p_norm(a.phi - b.phi, a.phi_t - b.phi_t, d);
  return s;
}

double picard_distance(const FieldState& a, const FieldState& b, double kappa) {
  if (!(a.grid() == b.grid())) throw GridMismatch("picard_distance: different grids");
  double m = 0.0;
  for (int k = 0; k < 10; ++k)
    m = std::max(m, e_h_norm(a.h[k] - b.h[k], a.h_t[k] - b.h_t[k], 1));
  m = std::max(m, e_p_norm(a.phi - b.phi, a.phi_t - b.phi_t, 1));
  const GridFunction dr = a.rho - b.rho;
  m = std::max(m, e_p_norm(dr, a.rho_t - b.rho_t, 1));
  m = std::max(m, l2_norm(dr) / std::sqrt(kappa));
  return m;
}

NormReport norm_report(const FieldState& S, int d, double c_mass) {
  NormReport r;
  r.t = S.t;
  r.d = d;
  auto fill = [&](int idx, const GridFunction& u, const GridFunction& ut) {
    FieldNorms& f = r.f[idx];
    f.x = x_norm(u, d);
    f.xp = xp_norm(u, d);
    f.em1 = e_minus1(u);
    f.eg = energy(S.h, u, ut);
    f.egc = energy_c(S.h, u, ut, c_mass);
  };
  for (int k = 0; k < 10; ++k) fill(k, S.h[k], S.h_t[k]);
  fill(10, S.phi, S.phi_t);
  fill(11, S.rho, S.rho_t);
  return r;
}

}  // namespace frlab
