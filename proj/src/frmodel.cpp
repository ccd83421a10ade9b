#include "frlab/frmodel.hpp"

#include <cmath>

namespace frlab {

FRModel::FRModel(double kappa_, double series_threshold_)
    : kappa(kappa_), series_threshold(series_threshold_) {
  if (!(kappa > 0.0)) throw Error("FRModel: kappa must be positive");
  if (!(series_threshold > 0.0)) throw Error("FRModel: series_threshold must be positive");
}

double FRModel::f(double r) const { return r + 0.5 * kappa * r * r; }

double FRModel::f_prime(double r) const { return 1.0 + kappa * r; }

double FRModel::rho_of_R(double R) const {
  const double fp = 1.0 + kappa * R;
  if (fp <= 0.0)
    throw NonPositiveConformalFactor("rho_of_R: 1 + kappa*R <= 0");
  return 0.5 * std::log1p(kappa * R);
}

double FRModel::R_of_rho(double s) const { return std::expm1(2.0 * s) / kappa; }

double FRModel::W1(double r) const {
  const double fp = f_prime(r);
  if (fp == 0.0) throw DivisionByZero("W1: f'(r) = 0");
  return -kappa * r * r / (2.0 * fp);
}

double FRModel::W2_exact(double s) const {
  const double em = std::expm1(2.0 * s);  // e^{2s} - 1
  return -em * em / (2.0 * kappa * std::exp(2.0 * s));
}

double FRModel::W2_series(double s) const {
  // W2 = -(cosh(2s) - 1)/kappa = -(1/kappa) (2 s^2 + (2/3) s^4 + O(s^6))
  const double s2 = s * s;
  return -(2.0 * s2 + (2.0 / 3.0) * s2 * s2) / kappa;
}

double FRModel::W2(double s) const {
  return std::abs(s) < series_threshold ? W2_series(s) : W2_exact(s);
}

double FRModel::W3(double s) const { return f(R_of_rho(s)); }

double FRModel::V_h_exact(double s) const {
  const double em = std::expm1(2.0 * s);
  return em * em / (2.0 * std::exp(4.0 * s));
}

double FRModel::V_h_series(double s) const {
  // 2 s^2 - 4 s^3 + (14/3) s^4 + O(s^5)
  const double s2 = s * s;
  return 2.0 * s2 - 4.0 * s2 * s + (14.0 / 3.0) * s2 * s2;
}

double FRModel::V_h(double s) const {
  return std::abs(s) < series_threshold ? V_h_series(s) : V_h_exact(s);
}

double FRModel::V_rho_exact(double s) const {
  return std::expm1(2.0 * s) / (6.0 * std::exp(4.0 * s)) - s / 3.0;
}

double FRModel::V_rho_series(double s) const {
  // -s^2 + (14/9) s^3 - (5/3) s^4 + O(s^5)
  const double s2 = s * s;
  return -s2 + (14.0 / 9.0) * s2 * s - (5.0 / 3.0) * s2 * s2;
}

double FRModel::V_rho(double s) const {
  return std::abs(s) < series_threshold ? V_rho_series(s) : V_rho_exact(s);
}

}  // namespace frlab
