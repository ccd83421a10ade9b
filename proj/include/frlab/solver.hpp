#ifndef FRLAB_SOLVER_HPP
#define FRLAB_SOLVER_HPP

#include <vector>

#include "frlab/dynamics.hpp"
#include "frlab/norms.hpp"

namespace frlab {

struct EvolveConfig {
  double cfl = 0.25;
  double dt = 0.0;  // 0 -> cfl * h
  double T = 1.0;
  int sample_stride = 8;  // residual/norm sampling every this many steps
  bool einstein = false;  // evolve the Einstein-limit system instead
  bool record_residuals = true;
  bool record_norms = true;
  int norm_d = 1;
  double eps0 = 0.25;
  Couplings couplings{};
  double picard_tol = 1e-10;
  int picard_max_iter = 12;

  double step_size(double h) const { return dt > 0.0 ? dt : cfl * h; }
};

struct Trajectory {
  std::vector<double> sample_times;
  std::vector<FieldState> snapshots;  // at sample stride; first and last included
  std::vector<ResidualReport> residuals;
  std::vector<NormReport> norms;
};

/// Explicit-step stability limit for the rho mass term 1/(3 kappa):
/// runs with dt > 0.5 sqrt(3 kappa) are rejected at validation.
void validate_timestep(const FRModel& model, const EvolveConfig& cfg, const Grid& grid);

/// One classical RK4 step of the first-order-in-time reduction.
FieldState step_rk4(const FRModel& model, const FieldState& S, double dt,
                    const EvolveConfig& cfg = EvolveConfig{});

/// Method-of-lines integration to T with residual/norm sampling.
Trajectory evolve(const FRModel& model, const EvolveConfig& cfg, const FieldState& S0);

struct PicardResult {
  Trajectory trajectory;                // of the converged iterate
  std::vector<double> distances;        // sup-in-time iterate distances
  std::vector<double> contraction;      // lambda_n = dist_{n+1}/dist_n
  int iterations = 0;
  bool converged = false;
};

/// Fixed-point iteration: iterate n+1 integrates the frozen-coefficient
/// linear system with coefficients and sources interpolated from iterate n
/// (cubic Hermite in time); iterate 0 solves the homogeneous flat system.
/// Distances use the depth-1 comparison metric. Throws NoContraction when
/// lambda_n >= 1 three times in a row.
PicardResult picard_solve(const FRModel& model, const EvolveConfig& cfg, const FieldState& S0);

}  // namespace frlab

#endif
