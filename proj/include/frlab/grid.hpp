#ifndef FRLAB_GRID_HPP
#define FRLAB_GRID_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "frlab/errors.hpp"

namespace frlab {

/// Uniform periodic grid on [x_min, x_max)^dims with dims in {1,3}.
/// Index layout: 1D i; 3D (k*n + j)*n + i with i running along x.
struct Grid {
  int dims = 1;
  int n = 64;
  double x_min = -4.0;
  double x_max = 4.0;
  int stencil_order = 4;  // 2 or 4

  Grid() = default;
  Grid(int dims_, int n_, double x_min_, double x_max_, int p = 4)
      : dims(dims_), n(n_), x_min(x_min_), x_max(x_max_), stencil_order(p) {
    if (dims != 1 && dims != 3) throw ConfigError("Grid: dims must be 1 or 3");
    if (n < 8) throw ConfigError("Grid: need at least 8 points per axis");
    if (!(x_max > x_min)) throw ConfigError("Grid: empty extent");
    if (p != 2 && p != 4) throw ConfigError("Grid: stencil order must be 2 or 4");
  }

  double h() const { return (x_max - x_min) / n; }
  std::size_t size() const {
    std::size_t s = static_cast<std::size_t>(n);
    return dims == 1 ? s : s * s * s;
  }
  double coord(int i) const { return x_min + i * h(); }
  double center() const { return 0.5 * (x_min + x_max); }

  std::size_t index(int i, int j = 0, int k = 0) const {
    auto w = [this](int a) { return ((a % n) + n) % n; };
    if (dims == 1) return static_cast<std::size_t>(w(i));
    return (static_cast<std::size_t>(w(k)) * n + w(j)) * n + w(i);
  }

  bool operator==(const Grid&) const = default;
};

/// Scalar field sampled on a grid. Immutable by convention once built.
struct GridFunction {
  Grid grid;
  std::vector<double> v;
  std::string tag;

  GridFunction() = default;
  explicit GridFunction(const Grid& g, std::string tag_ = {})
      : grid(g), v(g.size(), 0.0), tag(std::move(tag_)) {}

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
  std::size_t size() const { return v.size(); }

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(double c);
  /// this += c * o
  void axpy(double c, const GridFunction& o);

  double max_abs() const;
};

inline GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
inline GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
inline GridFunction operator*(double c, GridFunction a) { return a *= c; }

/// Centered first derivative along spatial axis (0=x,1=y,2=z), periodic,
/// at the grid's stencil order. Axes beyond the grid dimension return zero.
GridFunction d1(const GridFunction& u, int axis);

/// Centered second derivative d_a d_b (mixed axes via nested d1).
GridFunction d2(const GridFunction& u, int axis_a, int axis_b);

/// Rotation generator Omega_{ab} u = x_a d_b u - x_b d_a u about the box
/// center; 3D only.
GridFunction omega_apply(const GridFunction& u, int a, int b);

/// Distance from the box center at grid point idx (no periodic wrap; data
/// are assumed supported well inside the box).
double radius_at(const Grid& g, std::size_t idx);

/// Coordinate of point idx along spatial axis, measured from the box center.
double centered_coord(const Grid& g, std::size_t idx, int axis);

}  // namespace frlab

#endif
