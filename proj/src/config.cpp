#include "frlab/config.hpp"

#include <fstream>
#include <sstream>

namespace frlab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double num(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for " + key + ": '" + v + "'");
  }
}

bool boolean(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: bad boolean for " + key + ": '" + v + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  // collect raw grid fields first; the Grid constructor validates at the end
  int g_dims = c.grid.dims, g_n = c.grid.n, g_p = c.grid.stencil_order;
  double g_min = c.grid.x_min, g_max = c.grid.x_max;

  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("config: malformed section at line " +
                                                std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      if (section != "grid" && section != "model" && section != "data" && section != "evolve" &&
          section != "output" && section != "debug")
        throw ConfigError("config: unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected key=value at line " + std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;

    if (full == "grid.dims") g_dims = static_cast<int>(num(val, full));
    else if (full == "grid.n") g_n = static_cast<int>(num(val, full));
    else if (full == "grid.x_min") g_min = num(val, full);
    else if (full == "grid.x_max") g_max = num(val, full);
    else if (full == "grid.stencil_order") g_p = static_cast<int>(num(val, full));
    else if (full == "model.kappa") c.kappa = num(val, full);
    else if (full == "model.series_threshold") c.series_threshold = num(val, full);
    else if (full == "model.kappa_list") {
      std::istringstream ls(val);
      std::string tok;
      c.kappa_list.clear();
      while (std::getline(ls, tok, ',')) c.kappa_list.push_back(num(trim(tok), full));
    } else if (full == "data.family") {
      if (val == "vacuum") c.data.family = DataSpec::Family::vacuum;
      else if (val == "scalar_bump") c.data.family = DataSpec::Family::scalar_bump;
      else if (val == "gauge_wave") c.data.family = DataSpec::Family::gauge_wave;
      else if (val == "manufactured") c.data.family = DataSpec::Family::manufactured;
      else throw ConfigError("config: unknown data family '" + val + "'");
    } else if (full == "data.amplitude") c.data.amplitude = num(val, full);
    else if (full == "data.width") c.data.width = num(val, full);
    else if (full == "data.center") c.data.center = num(val, full);
    else if (full == "data.polarization") c.data.polarization = static_cast<int>(num(val, full));
    else if (full == "data.seed") c.data.seed = static_cast<unsigned>(num(val, full));
    else if (full == "evolve.cfl") c.evolve.cfl = num(val, full);
    else if (full == "evolve.dt") c.evolve.dt = num(val, full);
    else if (full == "evolve.T") c.evolve.T = num(val, full);
    else if (full == "evolve.sample_stride")
      c.evolve.sample_stride = static_cast<int>(num(val, full));
    else if (full == "evolve.einstein") c.evolve.einstein = boolean(val, full);
    else if (full == "evolve.record_residuals") c.evolve.record_residuals = boolean(val, full);
    else if (full == "evolve.record_norms") c.evolve.record_norms = boolean(val, full);
    else if (full == "evolve.norm_d") c.evolve.norm_d = static_cast<int>(num(val, full));
    else if (full == "evolve.eps0") c.evolve.eps0 = num(val, full);
    else if (full == "evolve.picard_tol") c.evolve.picard_tol = num(val, full);
    else if (full == "evolve.picard_max_iter")
      c.evolve.picard_max_iter = static_cast<int>(num(val, full));
    else if (full == "output.dir") c.out_dir = val;
    else if (full == "output.snapshots") c.write_snapshots = boolean(val, full);
    else if (full == "debug.identity_seed") c.identity_seed = static_cast<unsigned>(num(val, full));
    else if (full == "debug.corrupt_christoffel") c.corrupt_christoffel = boolean(val, full);
    else if (full == "debug.ablate_kappa_terms")
      c.evolve.couplings.kappa_terms = !boolean(val, full);
    else
      throw ConfigError("config: unknown key '" + full + "'");
  }

  c.grid = Grid(g_dims, g_n, g_min, g_max, g_p);  // validates
  if (!(c.kappa > 0.0)) throw ConfigError("config: kappa must be positive");
  if (!(c.data.amplitude >= 0.0)) throw ConfigError("config: amplitude must be >= 0");
  if (!(c.evolve.T > 0.0)) throw ConfigError("config: T must be positive");
  if (c.evolve.norm_d < 0 || c.evolve.norm_d > (c.grid.dims == 1 ? 4 : 2))
    throw ConfigError("config: norm_d out of range for this dimension");
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::string config_fingerprint(const RunConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "dims=" << c.grid.dims << " n=" << c.grid.n << " x=[" << c.grid.x_min << ","
     << c.grid.x_max << ") p=" << c.grid.stencil_order << " kappa=" << c.kappa
     << " family=" << static_cast<int>(c.data.family) << " eps=" << c.data.amplitude
     << " width=" << c.data.width << " T=" << c.evolve.T << " cfl=" << c.evolve.cfl
     << " dt=" << c.evolve.dt << " stride=" << c.evolve.sample_stride
     << " einstein=" << c.evolve.einstein << " norm_d=" << c.evolve.norm_d
     << " seed=" << c.data.seed;
  return os.str();
}

}  // namespace frlab
