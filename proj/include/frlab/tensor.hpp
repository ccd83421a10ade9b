#ifndef FRLAB_TENSOR_HPP
#define FRLAB_TENSOR_HPP

#include <array>
#include <functional>

#include "frlab/frmodel.hpp"
#include "frlab/jet4.hpp"
#include "frlab/sym4.hpp"

namespace frlab {

/// Pointwise metric with partial derivatives up to `order` (1, 2 or 4),
/// stored as per-component Taylor jets. Jets may come from analytic
/// closures (exact) or finite differences of grid data (stencil error).
struct MetricJet {
  int order = 2;
  std::array<Jet4, 10> c{};  // component order as in SymMatrix4

  SymMatrix4 value() const {
    SymMatrix4 g;
    for (int k = 0; k < 10; ++k) g[k] = c[k].v;
    return g;
  }
  SymMatrix4 d1(int mu) const {
    SymMatrix4 g;
    for (int k = 0; k < 10; ++k) g[k] = c[k].d1[mu];
    return g;
  }
  SymMatrix4 d2(int mu, int nu) const {
    SymMatrix4 g;
    for (int k = 0; k < 10; ++k) g[k] = c[k].g2(mu, nu);
    return g;
  }
};

/// Second-order jet of a scalar field at a point.
struct ScalarJet2 {
  double v = 0.0;
  Vec4 d1{};
  SymMatrix4 d2{};
};

/// Levi-Civita symbols Gamma^gamma_{alpha beta}, symmetric in (alpha,beta).
struct Christoffel {
  std::array<std::array<double, 10>, 4> g{};  // [gamma][packed alpha beta]
  double operator()(int gamma, int alpha, int beta) const {
    return g[gamma][SymMatrix4::index(alpha, beta)];
  }
  double& at(int gamma, int alpha, int beta) { return g[gamma][SymMatrix4::index(alpha, beta)]; }
};

struct GammaVector {
  Vec4 up{};    // Gamma^lambda = g^{ab} Gamma^lambda_{ab}
  Vec4 down{};  // Gamma_lambda = g_{lambda b} Gamma^b
};

struct RicciSplit {
  SymMatrix4 principal;  // -1/2 g^{a'b'} dd g_{ab}
  SymMatrix4 gauge;      // 1/2 (d_a Gamma_b + d_b Gamma_a)
  SymMatrix4 F;          // 2 (Ricci - principal - gauge); depends on (g, dg) only
};

/// Pointwise geometry bundle used by the pointwise operations and the grid
/// right-hand sides: value, inverse, first and second coordinate derivatives.
struct Geom {
  SymMatrix4 g;
  SymMatrix4 ginv;
  std::array<SymMatrix4, 4> dg{};
  std::array<std::array<SymMatrix4, 4>, 4> d2g{};  // symmetric in the two slots
};

Geom geom_from_jet(const MetricJet& jet);

// --- operations on value metrics ---

/// g^{-1}; throws SingularMetric.
inline SymMatrix4 invert_metric(const SymMatrix4& g) { return invert_sym4(g); }

/// H^{ab}(h) = (m+h)^{-1} - m^{-1} (contravariant). Requires ||h||_inf <= eps0.
SymMatrix4 h_to_H(const SymMatrix4& h, double eps0 = 0.25);

/// Jordan stress-energy T_ab = d_a phi d_b phi - 1/2 g_ab |grad phi|^2_g.
SymMatrix4 stress_energy_jordan(const SymMatrix4& g, const Vec4& dphi);

// --- operations on geometry bundles / jets ---

Christoffel christoffel(const Geom& geo);
inline Christoffel christoffel(const MetricJet& jet) { return christoffel(geom_from_jet(jet)); }

/// d_mu g^{ab} = -g^{aa'} g^{bb'} d_mu g_{a'b'}
std::array<SymMatrix4, 4> dginv(const Geom& geo);

GammaVector gamma_contracted(const Geom& geo);
inline GammaVector gamma_contracted(const MetricJet& jet) {
  return gamma_contracted(geom_from_jet(jet));
}

/// Ricci tensor from the definitional formula dGamma - dGamma + GG - GG.
SymMatrix4 ricci_full(const Geom& geo);
inline SymMatrix4 ricci_full(const MetricJet& jet) { return ricci_full(geom_from_jet(jet)); }

/// Wave-coordinate split of the Ricci tensor; principal + gauge + F/2
/// reassembles ricci_full exactly, and F carries no second derivatives.
RicciSplit ricci_wave_split(const Geom& geo);
inline RicciSplit ricci_wave_split(const MetricJet& jet) {
  return ricci_wave_split(geom_from_jet(jet));
}

/// F_{ab}(g; dg, dg) alone (second-derivative entries of geo are ignored).
SymMatrix4 ricci_first_order_part(const Geom& geo);

/// Box_g u = g^{ab} (dd u - Gamma^l_{ab} d_l u).
double box_scalar(const Geom& geo, const ScalarJet2& u);
inline double box_scalar(const MetricJet& jet, const ScalarJet2& u) {
  return box_scalar(geom_from_jet(jet), u);
}

/// Modified gravity tensor
///   N_g = f'(R) G - 1/2 (f - R f') g + (g Box_g - nabla d) f'(R),
/// evaluated from an order-4 jet. Throws NonPositiveConformalFactor when
/// 1 + kappa R_g <= 0.
SymMatrix4 modified_gravity_tensor(const FRModel& model, const MetricJet& jet);

/// Scalar curvature as a second-order jet (value, gradient, Hessian),
/// computed by jet arithmetic from an order-4 metric jet.
Jet4 scalar_curvature_jet(const MetricJet& jet);

/// Inverse of a metric given as component jets (adjugate over jet arithmetic).
std::array<Jet4, 10> jet_metric_inverse(const std::array<Jet4, 10>& g);

/// Ricci tensor as component jets (each valid to two orders below input).
std::array<Jet4, 10> jet_ricci(const std::array<Jet4, 10>& g);

}  // namespace frlab

#endif
