// frlab: numerical laboratory for the conformally augmented quadratic
// curvature wave system. Subcommands run the analytic identity suite, time
// evolution, the kappa comparison sweep, the fixed-point solver, and norm
// table dumps. All outputs are plain CSV with a manifest header.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "frlab/config.hpp"
#include "frlab/dynamics.hpp"
#include "frlab/identities.hpp"
#include "frlab/initialdata.hpp"
#include "frlab/norms.hpp"
#include "frlab/solver.hpp"
#include "frlab/state.hpp"

namespace {

constexpr const char* kVersion = "frlab 1.0 / schema v1";

// exit codes shared by all subcommands
enum ExitCode {
  kOk = 0,
  kConfigError = 1,
  kIdentityFailure = 2,
  kEvolutionFailure = 3,  // coercivity lost or non-finite state
  kNoContraction = 4,
};

void write_manifest(std::ostream& os, const frlab::RunConfig& cfg, double kappa) {
  os << "# " << kVersion << "\n";
  os << "# config: " << frlab::config_fingerprint(cfg) << "\n";
  os << "# grid: dims=" << cfg.grid.dims << " n=" << cfg.grid.n << " x=[" << cfg.grid.x_min
     << "," << cfg.grid.x_max << ") stencil_order=" << cfg.grid.stencil_order << "\n";
  os << "# kappa: " << kappa << "\n";
  os << "# boundary: periodic box (stands in for the asymptotically flat setting; "
        "run times are kept below the wrap-around crossing time)\n";
}

std::ofstream open_output(const frlab::RunConfig& cfg, const std::string& name, double kappa) {
  std::filesystem::create_directories(cfg.out_dir);
  const std::string path = cfg.out_dir + "/" + name;
  std::ofstream os(path);
  if (!os) throw frlab::ConfigError("cannot open output file " + path);
  os.precision(17);
  write_manifest(os, cfg, kappa);
  return os;
}

void write_residual_rows(std::ostream& os, const std::vector<frlab::ResidualReport>& rows) {
  os << "t,gauge0_l2,gauge1_l2,gauge2_l2,gauge3_l2,gauge0_sup,gauge1_sup,gauge2_sup,"
        "gauge3_sup,aug_l2,aug_sup,ham_l2,ham_sup,mom1_l2,mom2_l2,mom3_l2,mom1_sup,"
        "mom2_sup,mom3_sup,matter_l2,matter_sup\n";
  for (const auto& r : rows) {
    os << r.t;
    for (int a = 0; a < 4; ++a) os << "," << r.gauge_l2[a];
    for (int a = 0; a < 4; ++a) os << "," << r.gauge_sup[a];
    os << "," << r.aug_l2 << "," << r.aug_sup << "," << r.ham_l2 << "," << r.ham_sup;
    for (int i = 0; i < 3; ++i) os << "," << r.mom_l2[i];
    for (int i = 0; i < 3; ++i) os << "," << r.mom_sup[i];
    os << "," << r.matter_l2 << "," << r.matter_sup << "\n";
  }
}

void write_norm_rows(std::ostream& os, const std::vector<frlab::NormReport>& rows) {
  os << "t,d,field,x,xp,e_minus1,energy,energy_c\n";
  static const char* names[12] = {"h00", "h01", "h02", "h03", "h11", "h12",
                                  "h13", "h22", "h23", "h33", "phi", "rho"};
  for (const auto& r : rows)
    for (int k = 0; k < 12; ++k)
      os << r.t << "," << r.d << "," << names[k] << "," << r.f[k].x << "," << r.f[k].xp << ","
         << r.f[k].em1 << "," << r.f[k].eg << "," << r.f[k].egc << "\n";
}

int cmd_identities(const frlab::RunConfig& cfg) {
  const auto results =
      frlab::run_identity_suite(cfg.model(), cfg.identity_seed, cfg.corrupt_christoffel);
  auto os = open_output(cfg, "identities.csv", cfg.kappa);
  os << "name,residual,threshold,rate,expected_rate,pass\n";
  bool all_pass = true;
  for (const auto& r : results) {
    os << r.name << "," << r.residual << "," << r.threshold << "," << r.rate << ","
       << r.expected_rate << "," << (r.pass ? 1 : 0) << "\n";
    std::printf("%-28s residual %.3e (tol %.1e)", r.name.c_str(), r.residual, r.threshold);
    if (r.expected_rate > 0.0) std::printf("  rate %.2f (expect %.1f)", r.rate, r.expected_rate);
    std::printf("  %s\n", r.pass ? "PASS" : "FAIL");
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kOk : kIdentityFailure;
}

int cmd_evolve(const frlab::RunConfig& cfg) {
  const frlab::FRModel model = cfg.model();
  const frlab::FieldState S0 = frlab::build(cfg.data, cfg.grid, &model);
  const frlab::Trajectory tr = frlab::evolve(model, cfg.evolve, S0);

  if (cfg.evolve.record_residuals) {
    auto os = open_output(cfg, "residuals.csv", cfg.kappa);
    write_residual_rows(os, tr.residuals);
  }
  if (cfg.evolve.record_norms) {
    auto os = open_output(cfg, "norms.csv", cfg.kappa);
    write_norm_rows(os, tr.norms);
  }
  if (cfg.write_snapshots && !tr.snapshots.empty()) {
    frlab::write_snapshot(cfg.out_dir + "/final.snap", tr.snapshots.back());
    frlab::write_slice_csv(cfg.out_dir + "/final_slice.csv", tr.snapshots.back());
  }
  std::printf("evolve: %zu samples to t=%.6g\n", tr.sample_times.size(),
              tr.sample_times.empty() ? 0.0 : tr.sample_times.back());
  return kOk;
}

struct SweepMember {
  double kappa = 0.0;
  double sup_distance = 0.0;
  bool failed = false;
  std::string error;
};

void run_sweep_member(const frlab::RunConfig& cfg, SweepMember& m) {
  try {
    const frlab::FRModel model(m.kappa, cfg.series_threshold);
    frlab::FieldState S0 = frlab::build(cfg.data, cfg.grid, &model);
    // comparison hypothesis: the augmented run starts on the rho = 0 slice
    S0.rho *= 0.0;
    S0.rho_t *= 0.0;

    frlab::EvolveConfig ec = cfg.evolve;
    ec.record_residuals = false;
    ec.record_norms = false;
    ec.einstein = false;
    const frlab::Trajectory aug = frlab::evolve(model, ec, S0);
    ec.einstein = true;
    const frlab::Trajectory ein = frlab::evolve(model, ec, S0);

    double sup = 0.0;
    const std::size_t ns = std::min(aug.snapshots.size(), ein.snapshots.size());
    for (std::size_t k = 0; k < ns; ++k)
      sup = std::max(sup, frlab::comparison_distance(aug.snapshots[k], ein.snapshots[k],
                                                     cfg.evolve.norm_d));
    m.sup_distance = sup;
  } catch (const std::exception& e) {
    m.failed = true;
    m.error = e.what();
  }
}

int cmd_sweep_kappa(const frlab::RunConfig& cfg, int threads) {
  std::vector<double> kappas = cfg.kappa_list;
  if (kappas.empty()) kappas.push_back(cfg.kappa);

  std::vector<SweepMember> members(kappas.size());
  for (std::size_t i = 0; i < kappas.size(); ++i) members[i].kappa = kappas[i];

  // members are independent; a fixed block partition keeps output deterministic
  const int nt = std::max(1, std::min<int>(threads, static_cast<int>(members.size())));
  std::vector<std::thread> pool;
  std::size_t next = 0;
  for (int t = 0; t < nt; ++t) {
    const std::size_t lo = next;
    const std::size_t hi = lo + (members.size() - lo) / (nt - t);
    next = hi;
    pool.emplace_back([&cfg, &members, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) run_sweep_member(cfg, members[i]);
    });
  }
  for (auto& th : pool) th.join();

  auto os = open_output(cfg, "sweep_kappa.csv", cfg.kappa);
  os << "kappa,sup_distance,status\n";
  bool any_failed = false;
  for (const auto& m : members) {
    os << m.kappa << "," << m.sup_distance << "," << (m.failed ? "failed" : "ok") << "\n";
    if (m.failed) {
      any_failed = true;
      std::fprintf(stderr, "sweep kappa=%g failed: %s\n", m.kappa, m.error.c_str());
    } else {
      std::printf("kappa=%-10g sup_t D = %.6e\n", m.kappa, m.sup_distance);
    }
  }
  if (any_failed) return kEvolutionFailure;

  if (members.size() >= 2) {
    // least-squares slope of log D vs log kappa
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(members.size());
    for (const auto& m : members) {
      const double x = std::log(m.kappa);
      const double y = std::log(std::max(m.sup_distance, 1e-300));
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    os << "# slope: " << slope << "\n";
    std::printf("fitted slope of log D vs log kappa: %.4f\n", slope);
  }
  return kOk;
}

int cmd_picard(const frlab::RunConfig& cfg) {
  const frlab::FRModel model = cfg.model();
  const frlab::FieldState S0 = frlab::build(cfg.data, cfg.grid, &model);
  const frlab::PicardResult pr = frlab::picard_solve(model, cfg.evolve, S0);

  // reference: the direct nonlinear RK4 solution of the same problem
  frlab::EvolveConfig ec = cfg.evolve;
  ec.record_residuals = false;
  ec.record_norms = false;
  const frlab::Trajectory direct = frlab::evolve(model, ec, S0);
  const double gap =
      frlab::picard_distance(pr.trajectory.snapshots.back(), direct.snapshots.back(), model.kappa);

  auto os = open_output(cfg, "picard.csv", cfg.kappa);
  os << "iteration,distance,lambda\n";
  for (std::size_t k = 0; k < pr.distances.size(); ++k)
    os << k + 1 << "," << pr.distances[k] << ","
       << (k < pr.contraction.size() ? pr.contraction[k] : 0.0) << "\n";
  os << "# converged: " << (pr.converged ? 1 : 0) << " iterations: " << pr.iterations << "\n";
  os << "# fixed_point_vs_rk4: " << gap << "\n";

  double lam_max = 0.0;
  for (double l : pr.contraction) lam_max = std::max(lam_max, l);
  std::printf("picard: %d iterations, converged=%d, max lambda=%.4f, |fixed-point - rk4|=%.3e\n",
              pr.iterations, pr.converged ? 1 : 0, lam_max, gap);
  return (pr.converged || lam_max < 1.0) ? kOk : kNoContraction;
}

int cmd_norms(const frlab::RunConfig& cfg) {
  const frlab::FRModel model = cfg.model();
  const frlab::FieldState S0 = frlab::build(cfg.data, cfg.grid, &model);
  const frlab::NormReport r =
      frlab::norm_report(S0, cfg.evolve.norm_d, 1.0 / std::sqrt(model.kappa));
  auto os = open_output(cfg, "norms.csv", cfg.kappa);
  write_norm_rows(os, {r});
  std::printf("norms: d=%d written for %zu points\n", r.d, S0.points());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frlab: conformal quadratic-curvature wave system laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_override;
  int threads = 1;
  app.add_option("--config", config_path, "run configuration file (key=value with [sections])");
  app.add_option("--out", out_override, "output directory (overrides [output] dir)");
  app.add_option("--threads", threads, "worker threads for sweep members")->check(CLI::Range(1, 64));

  auto* c_id = app.add_subcommand("identities", "analytic-jet identity suite");
  auto* c_ev = app.add_subcommand("evolve", "time evolution with diagnostics");
  auto* c_sw = app.add_subcommand("sweep-kappa", "augmented vs Einstein-limit comparison sweep");
  auto* c_pi = app.add_subcommand("picard", "fixed-point iteration diagnostics");
  auto* c_no = app.add_subcommand("norms", "norm table for the initial data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; any usage error is a config error (1)
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    frlab::RunConfig cfg =
        config_path.empty() ? frlab::RunConfig{} : frlab::parse_config_file(config_path);
    if (!out_override.empty()) cfg.out_dir = out_override;

    if (c_id->parsed()) return cmd_identities(cfg);
    if (c_ev->parsed()) return cmd_evolve(cfg);
    if (c_sw->parsed()) return cmd_sweep_kappa(cfg, threads);
    if (c_pi->parsed()) return cmd_picard(cfg);
    if (c_no->parsed()) return cmd_norms(cfg);
    return kConfigError;
  } catch (const frlab::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  } catch (const frlab::NoContraction& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNoContraction;
  } catch (const frlab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kEvolutionFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kEvolutionFailure;
  }
}
