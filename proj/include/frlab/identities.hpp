#ifndef FRLAB_IDENTITIES_HPP
#define FRLAB_IDENTITIES_HPP

#include <string>
#include <vector>

#include "frlab/frmodel.hpp"

namespace frlab {

struct IdentityResult {
  std::string name;
  double residual = 0.0;   // worst-case over the sampled family
  double threshold = 0.0;  // pass iff residual <= threshold (absolute)
  double rate = 0.0;       // measured FD convergence order, when applicable
  double expected_rate = 0.0;
  bool pass = false;
};

/// Analytic-jet identity suite: conformal Ricci relation, conformal field
/// equation identity, contracted Bianchi divergence of the modified gravity
/// tensor (flat and conformal connection), and the first-order certificate
/// for the curvature remainder F. `corrupt` flips a Christoffel sign in the
/// first check (negative control).
std::vector<IdentityResult> run_identity_suite(const FRModel& model, unsigned seed,
                                               bool corrupt = false);

}  // namespace frlab

#endif
