#ifndef FRLAB_INITIALDATA_HPP
#define FRLAB_INITIALDATA_HPP

#include "frlab/frmodel.hpp"
#include "frlab/state.hpp"

namespace frlab {

struct DataSpec {
  enum class Family { vacuum, scalar_bump, gauge_wave, manufactured };
  Family family = Family::vacuum;
  double amplitude = 1e-3;  // epsilon
  double width = 1.0;
  double center = 0.0;      // offset from the box center, applied per axis
  int polarization = 0;     // gauge_wave: which xi component carries the profile
  unsigned seed = 1;        // manufactured family phases
};

/// Build initial data on a grid.
///  - vacuum: zero state.
///  - scalar_bump: phi = eps exp(-r^2/w^2), phi_t = 0, h = rho = 0.
///  - gauge_wave: h_ab = d_a xi_b + d_b xi_a for xi_b = eps chi(x-t) e_pol,
///    a right-moving solution of the linearized wave-gauge system.
///  - manufactured: analytic wavy metric g with rho = (1/2) ln f'(R_g)
///    imposed exactly, so the augmentation relation holds in the continuum
///    (requires model; use build_manufactured for the matching second
///    time derivatives).
/// Throws UnresolvedData when width < 4h.
FieldState build(const DataSpec& spec, const Grid& grid, const FRModel* model = nullptr);

/// Manufactured analytic state plus its exact second time derivatives.
FieldState build_manufactured(const DataSpec& spec, const Grid& grid, const FRModel& model,
                              RHSBundle* acc_out);

}  // namespace frlab

#endif
