#ifndef FRLAB_STATE_HPP
#define FRLAB_STATE_HPP

#include <array>
#include <string>

#include "frlab/grid.hpp"
#include "frlab/sym4.hpp"

namespace frlab {

/// Evolved triple (h_{ab}, phi, rho) with first time derivatives.
/// All 24 grid functions share one grid.
struct FieldState {
  double t = 0.0;
  std::array<GridFunction, 10> h;    // metric perturbation, SymMatrix4 order
  std::array<GridFunction, 10> h_t;  // d_t h
  GridFunction phi, phi_t;
  GridFunction rho, rho_t;

  FieldState() = default;
  explicit FieldState(const Grid& g);

  const Grid& grid() const { return phi.grid; }
  std::size_t points() const { return phi.size(); }

  /// visit the 24 evolved functions in a fixed order (h, h_t, phi, phi_t,
  /// rho, rho_t); reduction/update order is part of the determinism contract
  template <class F>
  void for_each(F&& f) {
    for (auto& u : h) f(u);
    for (auto& u : h_t) f(u);
    f(phi);
    f(phi_t);
    f(rho);
    f(rho_t);
  }
  template <class F>
  void for_each(F&& f) const {
    for (auto& u : h) f(u);
    for (auto& u : h_t) f(u);
    f(phi);
    f(phi_t);
    f(rho);
    f(rho_t);
  }

  double max_abs_h() const;
  bool finite() const;
};

/// Solved second time derivatives of the evolved fields.
struct RHSBundle {
  std::array<GridFunction, 10> h_tt;
  GridFunction phi_tt, rho_tt;

  RHSBundle() = default;
  explicit RHSBundle(const Grid& g);
};

/// Flat binary snapshot: text header line, then component-ordered float64.
void write_snapshot(const std::string& path, const FieldState& S);
FieldState read_snapshot(const std::string& path);

/// 1D slice (along x through the box center) as CSV: x, then one column
/// per component.
void write_slice_csv(const std::string& path, const FieldState& S);

}  // namespace frlab

#endif
