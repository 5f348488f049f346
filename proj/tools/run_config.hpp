#pragma once
// JSON run configuration: which solution, where to sample it, when.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ptds/catalog.hpp"
#include "ptds/verify.hpp"

namespace ptds::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "pi", "-pi/6", "2*pi", "3pi/4", or a plain number.
double parse_angle(const nlohmann::json& v);

struct RunConfig {
  std::string name;  // stem for output files
  std::string source;  // family name, "seed" or "dt"
  std::optional<FamilyId> family;
  FamilyParams params;
  Solution solution;
  GlobalParams globals;
  Box box;
  int nx = 121, ny = 121;
  std::vector<double> times{0.0};
  double h = 0.02;
  double png_ceiling = 10.0;
};

// Throws ConfigError (bad document) or ParameterError (bad physics).
RunConfig load_config(const std::string& path);
RunConfig make_config(const nlohmann::json& doc, const std::string& name);

}  // namespace ptds::cli
