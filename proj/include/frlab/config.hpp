#ifndef FRLAB_CONFIG_HPP
#define FRLAB_CONFIG_HPP

#include <string>
#include <vector>

#include "frlab/grid.hpp"
#include "frlab/initialdata.hpp"
#include "frlab/solver.hpp"

namespace frlab {

/// Run configuration parsed from a flat key=value file with [sections].
/// Unknown keys are rejected. All values have defaults; an empty file is a
/// valid configuration.
struct RunConfig {
  Grid grid{1, 1024, -4.0, 4.0, 4};
  double kappa = 0.1;
  double series_threshold = 1e-3;
  std::vector<double> kappa_list;  // sweep-kappa
  DataSpec data;
  EvolveConfig evolve;
  std::string out_dir = "out";
  bool write_snapshots = true;
  unsigned identity_seed = 7;
  bool corrupt_christoffel = false;  // negative control for the identity suite

  FRModel model() const { return FRModel(kappa, series_threshold); }
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Stable one-line fingerprint of the parsed configuration for manifests.
std::string config_fingerprint(const RunConfig& c);

}  // namespace frlab

#endif
