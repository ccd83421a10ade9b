#ifndef FRLAB_DYNAMICS_HPP
#define FRLAB_DYNAMICS_HPP

#include <array>

#include "frlab/frmodel.hpp"
#include "frlab/state.hpp"
#include "frlab/tensor.hpp"

namespace frlab {

/// Matter/potential coupling constants as carried by the evolution and
/// constraint assemblies. The defaults follow the printed system; the
/// constraint matter couplings (8 on the Hamiltonian quadratic terms, 1 on
/// the momentum flux) are a different convention and kept separate.
struct Couplings {
  double wave_matter = 16.0 * 3.14159265358979323846;      // on dphi dphi in the h equations
  double rho_matter = 4.0 * 3.14159265358979323846 / 3.0;  // on the rho-equation phi source
  double constraint_matter = 8.0;                          // Hamiltonian quadratic matter terms
  // Debug ablation: when false, every rho coupling into the h and phi
  // equations plus the kappa potentials and the mass term are dropped, so
  // the augmented system agrees with the Einstein-limit system on (h, phi).
  bool kappa_terms = true;
};

struct ConstraintResiduals {
  GridFunction hamiltonian;
  std::array<GridFunction, 3> momentum;
};

/// Per-slice residual summary (L2 and sup of each monitored residual).
struct ResidualReport {
  double t = 0.0;
  std::array<double, 4> gauge_l2{}, gauge_sup{};
  double aug_l2 = 0.0, aug_sup = 0.0;
  double ham_l2 = 0.0, ham_sup = 0.0;
  std::array<double, 3> mom_l2{}, mom_sup{};
  double matter_l2 = 0.0, matter_sup = 0.0;
};

/// Solved second time derivatives of the augmented system: at each point,
/// with g = m+h and H = g^{-1}-m,
///   dtt u = (1-H^00)^{-1} [ (delta^ab+H^ab) da db u + 2 H^0a dt da u - S_u ]
/// where S_u collects the first-order sources (curvature remainder F for h,
/// matter couplings, potentials, and the rho mass term +rho/(3 kappa)).
RHSBundle rhs_augmented(const FRModel& model, const FieldState& S,
                        const Couplings& cpl = Couplings{}, double eps0 = 0.25);

/// Einstein-limit system: the same assembly with every rho term deleted.
RHSBundle rhs_einstein(const FieldState& S, const Couplings& cpl = Couplings{},
                       double eps0 = 0.25);

/// Frozen-coefficient linear step of the fixed-point iteration: the wave
/// operator coefficients H and all first-order sources are evaluated on
/// `coeff`, while the principal second derivatives and the rho mass term
/// act on `lin`. rhs_frozen(model, S, S) == rhs_augmented(model, S).
/// With `coeff` the zero state this is the homogeneous flat-space system.
RHSBundle rhs_frozen(const FRModel& model, const FieldState& lin, const FieldState& coeff,
                     const Couplings& cpl = Couplings{}, double eps0 = 0.25);

/// Contracted Christoffels Gamma^lambda of g = m+h (wave-gauge residual).
std::array<GridFunction, 4> gauge_residual(const FieldState& S);

/// Pointwise e^{2 rho} - f'(R_g) with R_g the scalar curvature of the
/// physical metric e^{-2 rho}(m+h); second time derivatives from `acc`.
GridFunction augmentation_residual(const FRModel& model, const FieldState& S,
                                   const RHSBundle& acc);
GridFunction augmentation_residual(const FRModel& model, const FieldState& S);

/// Hamiltonian and momentum constraint residuals on the t=const slice.
ConstraintResiduals constraint_residuals(const FRModel& model, const FieldState& S,
                                         const Couplings& cpl = Couplings{});

/// Box_{m+h} phi - 2 (m+H)^{ab} da phi db rho, second time derivatives
/// from `acc`.
GridFunction matter_wave_residual(const FieldState& S, const RHSBundle& acc);

/// All monitored residual norms for one slice.
ResidualReport residual_report(const FRModel& model, const FieldState& S, const RHSBundle& acc,
                               const Couplings& cpl = Couplings{});

}  // namespace frlab

#endif
