#include "run_config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>

#include "ptds/ds1.hpp"
#include "ptds/ds2.hpp"
#include "ptds/spectra.hpp"

namespace ptds::cli {

using nlohmann::json;

double parse_angle(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw ConfigError("angle must be a number or a string such as \"-pi/6\"");
  const std::string s = v.get<std::string>();
  static const std::regex re(R"(\s*([+-]?)\s*([0-9]*\.?[0-9]*(?:[eE][+-]?[0-9]+)?)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*)");
  std::smatch m;
  if (std::regex_match(s, m, re)) {
    double c = m[2].length() ? std::stod(m[2]) : 1.0;
    if (m[1] == "-") c = -c;
    if (m[3].length()) c /= std::stod(m[3]);
    return c * pi;
  }
  try {
    std::size_t used = 0;
    const double d = std::stod(s, &used);
    if (used == s.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError("cannot read angle \"" + s + "\"");
}

namespace {

double number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw ConfigError(std::string("\"") + key + "\" must be a number");
  return obj[key].get<double>();
}

int sign(const json& obj, const char* key, int fallback) {
  const double v = number(obj, key, fallback);
  if (v != 1 && v != -1) throw ConfigError(std::string("\"") + key + "\" must be +1 or -1");
  return int(v);
}

cplx complex(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ConfigError("complex values are numbers or [re, im] pairs");
}

FamilyParams family_params(const json& p, FamilyId id) {
  FamilyParams out = default_params(id);
  static const char* known[] = {"epsilon", "r1", "phi1", "e1", "f1", "r2", "phi2", "e2", "f2", "sign"};
  for (const auto& [k, v] : p.items())
    if (std::find(std::begin(known), std::end(known), k) == std::end(known))
      throw ConfigError("unknown parameter \"" + k + "\"");
  out.epsilon = sign(p, "epsilon", out.epsilon);
  out.sign = sign(p, "sign", out.sign);
  out.r1 = number(p, "r1", out.r1);
  out.r2 = number(p, "r2", out.r2);
  out.e1 = number(p, "e1", out.e1);
  out.e2 = number(p, "e2", out.e2);
  out.f1 = number(p, "f1", out.f1);
  out.f2 = number(p, "f2", out.f2);
  if (p.contains("phi1")) out.phi1 = parse_angle(p["phi1"]);
  if (p.contains("phi2")) out.phi2 = parse_angle(p["phi2"]);
  return out;
}

// {"equation": "ds1"|"ds2", "epsilon": 1, "eigenfunctions": [{"r", "phi", "F": [re, im], "order"}],
//  "constants": [[...], ...]}.  "order" is the number of extra jet columns (ds1)
// or the multiplicity minus one (ds2).
Solution dt_pipeline(const json& d, GlobalParams& gp) {
  const std::string eq = d.value("equation", "");
  if (eq != "ds1" && eq != "ds2") throw ConfigError("dt.equation must be \"ds1\" or \"ds2\"");
  gp.alpha_sq = eq == "ds1" ? 1 : -1;
  gp.epsilon = sign(d, "epsilon", 1);
  if (!d.contains("eigenfunctions") || !d["eigenfunctions"].is_array() || d["eigenfunctions"].empty())
    throw ConfigError("dt.eigenfunctions must be a nonempty list");
  std::vector<SpectralParams> sps;
  std::vector<int> orders;
  for (const auto& e : d["eigenfunctions"]) {
    SpectralParams sp;
    sp.r = number(e, "r", 1.0);
    sp.phi = e.contains("phi") ? parse_angle(e["phi"]) : 0.0;
    sp.F = e.contains("F") ? complex(e["F"]) : 0.0;
    sps.push_back(sp);
    const double o = number(e, "order", 0);
    if (o < 0 || o != std::floor(o)) throw ConfigError("order must be a nonnegative integer");
    orders.push_back(int(o));
  }
  if (eq == "ds1") {
    if (d.contains("constants")) throw ConfigError("integration constants only apply to ds2");
    return ds1_highorder(sps, orders, gp);
  }
  std::vector<int> mult;
  for (int o : orders) mult.push_back(o + 1);
  int n = 0;
  for (int m : mult) n += m;
  CMat c = CMat::Zero(n, n);
  if (d.contains("constants")) {
    const auto& rows = d["constants"];
    if (!rows.is_array() || int(rows.size()) != n) throw ConfigError("dt.constants must be an n x n matrix");
    for (int i = 0; i < n; ++i) {
      if (!rows[i].is_array() || int(rows[i].size()) != n) throw ConfigError("dt.constants must be an n x n matrix");
      for (int j = 0; j < n; ++j) c(i, j) = complex(rows[i][j]);
    }
  }
  return ds2_highorder(sps, mult, c, gp);
}

}  // namespace

RunConfig make_config(const json& doc, const std::string& name) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig rc;
  rc.name = name;
  rc.source = doc.value("family", "");
  const json params = doc.value("params", json::object());
  if (!params.is_object()) throw ConfigError("\"params\" must be an object");

  if (rc.source == "seed") {
    rc.globals.epsilon = sign(params, "epsilon", 1);
    rc.globals.alpha_sq = sign(params, "alpha_sq", 1);
    rc.globals.rho = number(params, "rho", 1.0);
    rc.globals.validate();
    rc.solution = Solution::seed(rc.globals);
  } else if (rc.source == "dt") {
    if (!doc.contains("dt") || !doc["dt"].is_object()) throw ConfigError("family \"dt\" needs a \"dt\" object");
    rc.solution = dt_pipeline(doc["dt"], rc.globals);
  } else if (!rc.source.empty()) {
    try {
      rc.family = family_from_name(rc.source);
    } catch (const ParameterError& e) {
      throw ConfigError(e.what());
    }
    rc.params = family_params(params, *rc.family);
    rc.params.variant = doc.value("variant", "printed");
    validate_params(*rc.family, rc.params);
    rc.globals = family_globals(*rc.family, rc.params);
    rc.solution = catalog_solution(*rc.family, rc.params);
  } else {
    throw ConfigError("missing \"family\" (a catalog family, \"seed\" or \"dt\")");
  }

  if (doc.contains("debug_corrupt")) rc.solution = rc.solution.corrupted(number(doc, "debug_corrupt", 0));

  const json grid = doc.value("grid", json::object());
  auto range = [&](const char* key, double& lo, double& hi) {
    if (!grid.contains(key)) return;
    const auto& r = grid[key];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      throw ConfigError(std::string("grid.") + key + " must be [min, max]");
    lo = r[0].get<double>();
    hi = r[1].get<double>();
    if (!(hi >= lo)) throw ConfigError(std::string("grid.") + key + " is reversed");
  };
  range("x", rc.box.xmin, rc.box.xmax);
  range("y", rc.box.ymin, rc.box.ymax);
  rc.nx = int(number(grid, "nx", rc.nx));
  rc.ny = int(number(grid, "ny", rc.ny));
  if (rc.nx < 1 || rc.ny < 1) throw ConfigError("grid resolution must be positive");

  if (doc.contains("times")) {
    if (!doc["times"].is_array() || doc["times"].empty()) throw ConfigError("\"times\" must be a nonempty list");
    rc.times.clear();
    for (const auto& t : doc["times"]) {
      if (!t.is_number()) throw ConfigError("times must be numbers");
      rc.times.push_back(t.get<double>());
    }
  }
  rc.h = number(doc, "h", rc.h);
  if (!(rc.h > 0)) throw ConfigError("\"h\" must be positive");
  rc.png_ceiling = number(doc, "png_ceiling", rc.png_ceiling);
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return make_config(doc, std::filesystem::path(path).stem().string());
}

}  // namespace ptds::cli
