#ifndef FRLAB_FRMODEL_HPP
#define FRLAB_FRMODEL_HPP

#include "frlab/errors.hpp"

namespace frlab {

/// Quadratic curvature model f(r) = r + (kappa/2) r^2 and the scalar
/// functions derived from it. All members are pure and thread-safe.
///
/// Near s = 0 the exact expressions for W2, V_h, V_rho suffer cancellation
/// in e^{2s}-1; below series_threshold a Taylor branch (through s^4) is
/// used instead. The two branches agree to <= 1e-12 at the crossover
/// (covered by tests).
struct FRModel {
  double kappa;
  double series_threshold = 1e-3;

  explicit FRModel(double kappa_, double series_threshold_ = 1e-3);

  /// f(r) = r + (kappa/2) r^2
  double f(double r) const;

  /// f'(r) = 1 + kappa r
  double f_prime(double r) const;

  /// rho(R) = (1/2) ln f'(R). Throws NonPositiveConformalFactor when
  /// 1 + kappa R <= 0.
  double rho_of_R(double R) const;

  /// Inverse of rho_of_R: theta(s) = (e^{2s}-1)/kappa.
  double R_of_rho(double s) const;

  /// W1(r) = (f - r f')/f'. Throws DivisionByZero when f'(r) = 0.
  double W1(double r) const;

  /// W2(s) = -(e^{2s}-1)^2 / (2 kappa e^{2s}); equals W1(theta(s)).
  double W2(double s) const;

  /// W3(s) = f(theta(s)).
  double W3(double s) const;

  /// V_h(s) = (e^{2s}-1)^2 / (2 e^{4s}) = 2s^2 - 4s^3 + O(s^4).
  /// The evolution system carries kappa^{-1} V_h.
  double V_h(double s) const;

  /// V_rho(s) = (e^{2s}-1)/(6 e^{4s}) - s/3 = -s^2 + O(s^3).
  double V_rho(double s) const;

  /// Force one branch; used by the crossover agreement tests.
  double W2_exact(double s) const;
  double W2_series(double s) const;
  double V_h_exact(double s) const;
  double V_h_series(double s) const;
  double V_rho_exact(double s) const;
  double V_rho_series(double s) const;
};

}  // namespace frlab

#endif
