#include "frlab/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace frlab {

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  if (o.v.size() != v.size()) throw GridMismatch("GridFunction +=: size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  if (o.v.size() != v.size()) throw GridMismatch("GridFunction -=: size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
  return *this;
}

GridFunction& GridFunction::operator*=(double c) {
  for (double& x : v) x *= c;
  return *this;
}

void GridFunction::axpy(double c, const GridFunction& o) {
  if (o.v.size() != v.size()) throw GridMismatch("GridFunction axpy: size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * o.v[i];
  return;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

namespace {

// strides per axis; axis >= dims has stride 0 (constant direction)
std::ptrdiff_t stride(const Grid& g, int axis) {
  if (axis >= g.dims) return 0;
  std::ptrdiff_t s = 1;
  for (int a = 0; a < axis; ++a) s *= g.n;
  return s;
}

// apply a 1D periodic stencil along one axis
template <int W>
void apply_stencil(const GridFunction& u, int axis, const std::array<double, 2 * W + 1>& w,
                   double scale, GridFunction& out) {
  const Grid& g = u.grid;
  const int n = g.n;
  const std::ptrdiff_t st = stride(g, axis);
  if (st == 0) {
    std::fill(out.v.begin(), out.v.end(), 0.0);
    return;
  }
  const std::size_t total = g.size();
  const std::size_t line = static_cast<std::size_t>(st) * n;  // span of one axis period
  for (std::size_t base = 0; base < total; ++base) {
    // position along the axis and start of its period
    const std::size_t along = (base / st) % n;
    const std::size_t origin = base - along * st;
    double s = 0.0;
    for (int o = -W; o <= W; ++o) {
      const std::size_t p = origin + ((along + n + o) % n) * st;
      s += w[o + W] * u.v[p];
    }
    out.v[base] = s * scale;
    (void)line;
  }
}

}  // namespace

GridFunction d1(const GridFunction& u, int axis) {
  if (axis < 0 || axis > 2) throw DimensionMismatch("d1: axis out of range");
  GridFunction out(u.grid);
  const double h = u.grid.h();
  if (u.grid.stencil_order == 2) {
    apply_stencil<1>(u, axis, {-0.5, 0.0, 0.5}, 1.0 / h, out);
  } else {
    // integer weights so that constants cancel exactly
    apply_stencil<2>(u, axis, {1.0, -8.0, 0.0, 8.0, -1.0}, 1.0 / (12.0 * h), out);
  }
  return out;
}

GridFunction d2(const GridFunction& u, int axis_a, int axis_b) {
  if (axis_a < 0 || axis_a > 2 || axis_b < 0 || axis_b > 2)
    throw DimensionMismatch("d2: axis out of range");
  if (axis_a != axis_b) return d1(d1(u, axis_a), axis_b);
  GridFunction out(u.grid);
  const double h2 = u.grid.h() * u.grid.h();
  if (u.grid.stencil_order == 2) {
    apply_stencil<1>(u, axis_a, {1.0, -2.0, 1.0}, 1.0 / h2, out);
  } else {
    apply_stencil<2>(u, axis_a, {-1.0, 16.0, -30.0, 16.0, -1.0}, 1.0 / (12.0 * h2), out);
  }
  return out;
}

GridFunction omega_apply(const GridFunction& u, int a, int b) {
  if (u.grid.dims != 3) throw DimensionMismatch("omega_apply: requires a 3D grid");
  if (a < 0 || a > 2 || b < 0 || b > 2 || a == b)
    throw DimensionMismatch("omega_apply: bad generator axes");
  const GridFunction db = d1(u, b), da = d1(u, a);
  GridFunction out(u.grid);
  for (std::size_t i = 0; i < out.size(); ++i)
    out.v[i] = centered_coord(u.grid, i, a) * db.v[i] - centered_coord(u.grid, i, b) * da.v[i];
  return out;
}

double centered_coord(const Grid& g, std::size_t idx, int axis) {
  if (axis >= g.dims) return 0.0;
  std::size_t t = idx;
  for (int a = 0; a < axis; ++a) t /= g.n;
  const int i = static_cast<int>(t % g.n);
  return g.coord(i) - g.center();
}

double radius_at(const Grid& g, std::size_t idx) {
  double r2 = 0.0;
  for (int a = 0; a < g.dims; ++a) {
    const double x = centered_coord(g, idx, a);
    r2 += x * x;
  }
  return std::sqrt(r2);
}

}  // namespace frlab
