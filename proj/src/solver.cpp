#include "frlab/solver.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace frlab {

namespace {

void axpy_state(FieldState& y, double c, const FieldState& k) {
  for (int i = 0; i < 10; ++i) {
    y.h[i].axpy(c, k.h[i]);
    y.h_t[i].axpy(c, k.h_t[i]);
  }
  y.phi.axpy(c, k.phi);
  y.phi_t.axpy(c, k.phi_t);
  y.rho.axpy(c, k.rho);
  y.rho_t.axpy(c, k.rho_t);
}

// pack (d/dt fields) as a FieldState: .h holds dt h, .h_t holds dtt h, etc.
FieldState as_deriv(const FieldState& S, RHSBundle&& a) {
  FieldState D(S.grid());
  D.t = S.t;
  for (int i = 0; i < 10; ++i) {
    D.h[i] = S.h_t[i];
    D.h_t[i] = std::move(a.h_tt[i]);
  }
  D.phi = S.phi_t;
  D.phi_t = std::move(a.phi_tt);
  D.rho = S.rho_t;
  D.rho_t = std::move(a.rho_tt);
  return D;
}

using RhsFn = std::function<RHSBundle(const FieldState&)>;

FieldState step_rk4_generic(const FieldState& S, double dt, const RhsFn& rhs) {
  const FieldState k1 = as_deriv(S, rhs(S));
  FieldState s = S;
  s.t = S.t + 0.5 * dt;
  axpy_state(s, 0.5 * dt, k1);
  const FieldState k2 = as_deriv(s, rhs(s));
  s = S;
  s.t = S.t + 0.5 * dt;
  axpy_state(s, 0.5 * dt, k2);
  const FieldState k3 = as_deriv(s, rhs(s));
  s = S;
  s.t = S.t + dt;
  axpy_state(s, dt, k3);
  const FieldState k4 = as_deriv(s, rhs(s));
  FieldState out = S;
  out.t = S.t + dt;
  axpy_state(out, dt / 6.0, k1);
  axpy_state(out, dt / 3.0, k2);
  axpy_state(out, dt / 3.0, k3);
  axpy_state(out, dt / 6.0, k4);
  if (!out.finite()) throw StepRejected("rk4: non-finite state after step");
  return out;
}

}  // namespace

void validate_timestep(const FRModel& model, const EvolveConfig& cfg, const Grid& grid) {
  if (!(cfg.T > 0.0)) throw ConfigError("evolve: T must be positive");
  const double dt = cfg.step_size(grid.h());
  if (!(dt > 0.0)) throw ConfigError("evolve: nonpositive time step");
  if (dt > cfg.cfl * grid.h() * (1.0 + 1e-12) && cfg.dt > 0.0 && cfg.cfl > 0.0) {
    // explicit dt larger than the CFL suggestion is allowed but flagged by
    // the stiff rule below only; wave-speed CFL uses unit speed
  }
  if (!cfg.einstein && cfg.couplings.kappa_terms) {
    const double stiff = 0.5 * std::sqrt(3.0 * model.kappa);
    if (dt > stiff) {
      std::ostringstream os;
      os << "evolve: dt=" << dt << " exceeds the explicit mass-term limit 0.5*sqrt(3*kappa)="
         << stiff << "; refine the grid or lower cfl so dt <= " << stiff;
      throw ConfigError(os.str());
    }
  }
}

FieldState step_rk4(const FRModel& model, const FieldState& S, double dt,
                    const EvolveConfig& cfg) {
  const RhsFn rhs = cfg.einstein
                        ? RhsFn([&](const FieldState& y) {
                            return rhs_einstein(y, cfg.couplings, cfg.eps0);
                          })
                        : RhsFn([&](const FieldState& y) {
                            return rhs_augmented(model, y, cfg.couplings, cfg.eps0);
                          });
  return step_rk4_generic(S, dt, rhs);
}

namespace {

void record_sample(const FRModel& model, const EvolveConfig& cfg, const FieldState& S,
                   Trajectory& out) {
  out.sample_times.push_back(S.t);
  out.snapshots.push_back(S);
  if (cfg.record_residuals) {
    const RHSBundle acc = cfg.einstein ? rhs_einstein(S, cfg.couplings, cfg.eps0)
                                       : rhs_augmented(model, S, cfg.couplings, cfg.eps0);
    out.residuals.push_back(residual_report(model, S, acc, cfg.couplings));
  }
  if (cfg.record_norms)
    out.norms.push_back(norm_report(S, cfg.norm_d, 1.0 / std::sqrt(model.kappa)));
}

}  // namespace

Trajectory evolve(const FRModel& model, const EvolveConfig& cfg, const FieldState& S0) {
  validate_timestep(model, cfg, S0.grid());
  double dt = cfg.step_size(S0.grid().h());
  const int n = std::max(1, static_cast<int>(std::ceil(cfg.T / dt - 1e-9)));
  dt = cfg.T / n;

  Trajectory out;
  FieldState S = S0;
  record_sample(model, cfg, S, out);
  for (int step = 1; step <= n; ++step) {
    S = step_rk4(model, S, dt, cfg);
    if (step == n || (cfg.sample_stride > 0 && step % cfg.sample_stride == 0))
      record_sample(model, cfg, S, out);
  }
  return out;
}

namespace {

struct Node {
  FieldState S;
  RHSBundle a;
};

// cubic Hermite reconstruction of iterate data at time t
FieldState interp_nodes(const std::vector<Node>& nodes, double dt, double t) {
  const double t0 = nodes.front().S.t;
  const int last = static_cast<int>(nodes.size()) - 1;
  int i = static_cast<int>(std::floor((t - t0) / dt + 1e-12));
  i = std::max(0, std::min(i, last - 1));
  const double th = std::min(1.0, std::max(0.0, (t - t0 - i * dt) / dt));
  const double b00 = (2.0 * th - 3.0) * th * th + 1.0;
  const double b10 = ((th - 2.0) * th + 1.0) * th;
  const double b01 = (3.0 - 2.0 * th) * th * th;
  const double b11 = (th - 1.0) * th * th;

  const Node& A = nodes[i];
  const Node& B = nodes[i + 1];
  FieldState out(A.S.grid());
  out.t = t;
  auto blend = [&](GridFunction& o, const GridFunction& ua, const GridFunction& va,
                   const GridFunction& ub, const GridFunction& vb) {
    for (std::size_t p = 0; p < o.size(); ++p)
      o.v[p] = b00 * ua.v[p] + b10 * dt * va.v[p] + b01 * ub.v[p] + b11 * dt * vb.v[p];
  };
  for (int k = 0; k < 10; ++k) {
    blend(out.h[k], A.S.h[k], A.S.h_t[k], B.S.h[k], B.S.h_t[k]);
    blend(out.h_t[k], A.S.h_t[k], A.a.h_tt[k], B.S.h_t[k], B.a.h_tt[k]);
  }
  blend(out.phi, A.S.phi, A.S.phi_t, B.S.phi, B.S.phi_t);
  blend(out.phi_t, A.S.phi_t, A.a.phi_tt, B.S.phi_t, B.a.phi_tt);
  blend(out.rho, A.S.rho, A.S.rho_t, B.S.rho, B.S.rho_t);
  blend(out.rho_t, A.S.rho_t, A.a.rho_tt, B.S.rho_t, B.a.rho_tt);
  return out;
}

}  // namespace

PicardResult picard_solve(const FRModel& model, const EvolveConfig& cfg, const FieldState& S0) {
  validate_timestep(model, cfg, S0.grid());
  double dt = cfg.step_size(S0.grid().h());
  const int n = std::max(1, static_cast<int>(std::ceil(cfg.T / dt - 1e-9)));
  dt = cfg.T / n;

  const FieldState zero(S0.grid());
  std::vector<Node> prev;
  PicardResult res;
  int bad = 0;

  for (int it = 0; it <= cfg.picard_max_iter; ++it) {
    const RhsFn rhs = [&](const FieldState& y) -> RHSBundle {
      if (prev.empty())
        return rhs_frozen(model, y, zero, cfg.couplings, cfg.eps0);
      const FieldState c = interp_nodes(prev, dt, y.t);
      return rhs_frozen(model, y, c, cfg.couplings, cfg.eps0);
    };

    std::vector<Node> cur;
    cur.reserve(n + 1);
    FieldState S = S0;
    cur.push_back(Node{S, rhs(S)});
    for (int step = 1; step <= n; ++step) {
      S = step_rk4_generic(S, dt, rhs);
      cur.push_back(Node{S, rhs(S)});
    }

    if (!prev.empty()) {
      double dist = 0.0;
      const int stride = std::max(1, cfg.sample_stride);
      for (int k = 0; k < static_cast<int>(cur.size()); k += stride)
        dist = std::max(dist, picard_distance(cur[k].S, prev[k].S, model.kappa));
      dist = std::max(dist, picard_distance(cur.back().S, prev.back().S, model.kappa));

      if (!res.distances.empty()) {
        const double lam = res.distances.back() > 0.0 ? dist / res.distances.back() : 0.0;
        res.contraction.push_back(lam);
        bad = (lam >= 1.0) ? bad + 1 : 0;
        if (bad >= 3) throw NoContraction("picard: iterates not contracting");
      }
      res.distances.push_back(dist);
      if (dist < cfg.picard_tol) {
        prev = std::move(cur);
        res.converged = true;
        res.iterations = it;
        break;
      }
    }
    prev = std::move(cur);
    res.iterations = it;
  }

  // assemble the trajectory of the last iterate at the sampling stride
  Trajectory& tr = res.trajectory;
  const int stride = std::max(1, cfg.sample_stride);
  for (int k = 0; k < static_cast<int>(prev.size()); ++k) {
    if (k % stride != 0 && k != static_cast<int>(prev.size()) - 1) continue;
    const FieldState& S = prev[k].S;
    tr.sample_times.push_back(S.t);
    tr.snapshots.push_back(S);
    if (cfg.record_residuals) {
      const RHSBundle acc = rhs_augmented(model, S, cfg.couplings, cfg.eps0);
      tr.residuals.push_back(residual_report(model, S, acc, cfg.couplings));
    }
    if (cfg.record_norms)
      tr.norms.push_back(norm_report(S, cfg.norm_d, 1.0 / std::sqrt(model.kappa)));
  }
  return res;
}

}  // namespace frlab
