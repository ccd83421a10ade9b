#include "frlab/state.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace frlab {

namespace {
const char* comp_name(int k) {
  static const char* names[10] = {"h00", "h01", "h02", "h03", "h11",
                                  "h12", "h13", "h22", "h23", "h33"};
  return names[k];
}
}  // namespace

FieldState::FieldState(const Grid& g) {
  for (int k = 0; k < 10; ++k) {
    h[k] = GridFunction(g, comp_name(k));
    h_t[k] = GridFunction(g, std::string("dt_") + comp_name(k));
  }
  phi = GridFunction(g, "phi");
  phi_t = GridFunction(g, "dt_phi");
  rho = GridFunction(g, "rho");
  rho_t = GridFunction(g, "dt_rho");
}

double FieldState::max_abs_h() const {
  double m = 0.0;
  for (const auto& u : h) m = std::max(m, u.max_abs());
  return m;
}

bool FieldState::finite() const {
  bool ok = true;
  for_each([&ok](const GridFunction& u) {
    for (double x : u.v)
      if (!std::isfinite(x)) ok = false;
  });
  return ok;
}

RHSBundle::RHSBundle(const Grid& g) {
  for (int k = 0; k < 10; ++k) h_tt[k] = GridFunction(g, std::string("dtt_") + comp_name(k));
  phi_tt = GridFunction(g, "dtt_phi");
  rho_tt = GridFunction(g, "dtt_rho");
}

void write_snapshot(const std::string& path, const FieldState& S) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("write_snapshot: cannot open " + path);
  const Grid& g = S.grid();
  f << "frlab-snapshot v1 dims=" << g.dims << " n=" << g.n << " x_min=" << g.x_min
    << " x_max=" << g.x_max << " p=" << g.stencil_order << " t=" << S.t << "\n";
  S.for_each([&f](const GridFunction& u) {
    f.write(reinterpret_cast<const char*>(u.v.data()),
            static_cast<std::streamsize>(u.v.size() * sizeof(double)));
  });
  if (!f) throw Error("write_snapshot: write failed for " + path);
}

FieldState read_snapshot(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("read_snapshot: cannot open " + path);
  std::string header;
  std::getline(f, header);
  std::istringstream hs(header);
  std::string magic, ver;
  hs >> magic >> ver;
  if (magic != "frlab-snapshot" || ver != "v1")
    throw Error("read_snapshot: bad header in " + path);
  int dims = 0, n = 0, p = 0;
  double x_min = 0, x_max = 0, t = 0;
  std::string kv;
  while (hs >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = kv.substr(0, eq);
    const double val = std::stod(kv.substr(eq + 1));
    if (key == "dims") dims = static_cast<int>(val);
    else if (key == "n") n = static_cast<int>(val);
    else if (key == "x_min") x_min = val;
    else if (key == "x_max") x_max = val;
    else if (key == "p") p = static_cast<int>(val);
    else if (key == "t") t = val;
  }
  Grid g(dims, n, x_min, x_max, p);
  FieldState S(g);
  S.t = t;
  S.for_each([&f, &path](GridFunction& u) {
    f.read(reinterpret_cast<char*>(u.v.data()),
           static_cast<std::streamsize>(u.v.size() * sizeof(double)));
    if (!f) throw Error("read_snapshot: truncated payload in " + path);
  });
  return S;
}

void write_slice_csv(const std::string& path, const FieldState& S) {
  std::ofstream f(path);
  if (!f) throw Error("write_slice_csv: cannot open " + path);
  const Grid& g = S.grid();
  f.precision(17);
  f << "x";
  S.for_each([&f](const GridFunction& u) { f << "," << u.tag; });
  f << "\n";
  const int jc = g.dims == 3 ? g.n / 2 : 0;
  for (int i = 0; i < g.n; ++i) {
    const std::size_t idx = g.index(i, jc, jc);
    f << g.coord(i);
    S.for_each([&f, idx](const GridFunction& u) { f << "," << u.v[idx]; });
    f << "\n";
  }
}

}  // namespace frlab
