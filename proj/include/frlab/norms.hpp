#ifndef FRLAB_NORMS_HPP
#define FRLAB_NORMS_HPP

#include <vector>

#include "frlab/state.hpp"

namespace frlab {

/// Plain L2 with cell volume h^dims.
double l2_norm(const GridFunction& u);

/// All fields d^{I1} Omega^{I2} u with |I1|+|I2| <= d (Omega terms only in
/// 3D). Enumeration order is fixed for determinism.
std::vector<GridFunction> derivative_family(const GridFunction& u, int d);

/// X^d: sum of L2 norms over the derivative family.
double x_norm(const GridFunction& u, int d);

/// X_P^{d+1}: sum over the family of the L2 norm of the spatial gradient.
double xp_norm(const GridFunction& u, int d);

/// Weighted sup-norm sup (1+r)|u|, r from the box center.
double e_minus1(const GridFunction& u);

/// X_H^{d+1} = E_{-1} + X_P^{d+1}.
double x_h_norm(const GridFunction& u, int d);

/// Energy E_g = sqrt( int -g^00 |ut|^2 + g^ab da u db u ) with the inverse
/// metric of m+h; the diagonal-block quadratic form must be positive
/// definite pointwise (CoercivityLost otherwise). energy_c adds c^2 u^2.
double energy(const std::array<GridFunction, 10>& h, const GridFunction& u,
              const GridFunction& ut);
double energy_c(const std::array<GridFunction, 10>& h, const GridFunction& u,
                const GridFunction& ut, double c);

/// E_g^d: sum of energy over the derivative family (time derivative of a
/// family member is the same member of the ut family).
double energy_d(const std::array<GridFunction, 10>& h, const GridFunction& u,
                const GridFunction& ut, int d);

/// Discrete E_P^{d+1}: spacetime-gradient family norm, truncated at the one
/// stored time derivative.
double e_p_norm(const GridFunction& u, const GridFunction& ut, int d);

/// Discrete E_H^{d+1} = E_{-1} + E_P^{d+1}.
double e_h_norm(const GridFunction& u, const GridFunction& ut, int d);

/// Comparison distance between two states on one grid:
/// sum_ab ||dh_ab||_{E_H} + ||dphi||_{E_P} at derivative depth d.
double comparison_distance(const FieldState& a, const FieldState& b, int d);

/// Contraction metric for the fixed-point solver: the comparison families
/// at depth 1 plus the kappa-weighted L2 of the rho difference.
double picard_distance(const FieldState& a, const FieldState& b, double kappa);

struct FieldNorms {
  double x = 0.0, xp = 0.0, em1 = 0.0, eg = 0.0, egc = 0.0;
};

/// Norm summary for one slice; fields 0..9 = h components, 10 = phi,
/// 11 = rho. egc uses the supplied mass weight c.
struct NormReport {
  double t = 0.0;
  int d = 0;
  std::array<FieldNorms, 12> f{};
};

NormReport norm_report(const FieldState& S, int d, double c_mass);

}  // namespace frlab

#endif
