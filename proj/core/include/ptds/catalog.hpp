#pragma once
// Closed-form rational solutions, evaluated directly, plus for each family the
// Darboux construction that reproduces it.

#include <optional>
#include <string>
#include <vector>

#include "ptds/solution.hpp"

namespace ptds {

enum class FamilyId {
  ds1_fundamental,
  ds1_peregrine,
  ds1_travelling,
  ds1_two_rogue,
  ds1_hybrid,
  ds1_second_order,
  ds2_fundamental,
  ds2_line,
  ds2_travelling,
  ds2_two_rational,
  ds2_second_order,
  ds2_local_ds1_map,
};

const std::vector<FamilyId>& all_families();
std::string family_name(FamilyId id);
FamilyId family_from_name(const std::string& name);  // throws ParameterError

// Superset of every family's parameters; each family reads the ones its
// schema lists.  variant: "printed" (verbatim), "corrected" (where the
// verbatim form has a known slip), "reduced" (ds1_travelling at r1 = 1).
struct FamilyParams {
  int epsilon = 1;
  double r1 = 1.0, phi1 = 0.0, e1 = 0.0, f1 = 0.0;
  double r2 = 1.0, phi2 = 0.0, e2 = 0.0, f2 = 0.0;
  int sign = 1;
  std::string variant = "printed";
};

struct FamilyInfo {
  FamilyId id;
  std::string name;
  std::string equation;  // "ds1" or "ds2"
  std::vector<std::string> schema;
  std::vector<std::string> variants;
  bool has_u = true;
  bool has_w = false;      // w printed
  bool dt_backed = false;  // no printed u; evaluated through the Darboux engine
  bool rogue = true;       // approaches the constant background as t -> -inf
  bool nonlocal = true;    // solves the nonlocal system (false for the local DS-I map)
  std::string notes;
};

const FamilyInfo& family_info(FamilyId id);

// Reference parameter sets; the defaults of the CLI.
FamilyParams default_params(FamilyId id);

GlobalParams family_globals(FamilyId id, const FamilyParams& p);

// Schema/branch validation; throws ParameterError.
void validate_params(FamilyId id, const FamilyParams& p);

struct CatalogValue {
  cplx u;
  std::optional<cplx> w;
  Flag flag = Flag::regular;
  cplx denom;
};

// Literal evaluation of the printed expressions (dt-backed families go
// through the engine).  |denominator| < 1e-12 tags the sample singular.
CatalogValue catalog_eval(FamilyId id, const FamilyParams& p, const Point& pt);

// The Darboux construction of the family, with the unimodular gauge factor
// already applied.  Throws ParameterError for families without one.
struct DtRecipe {
  Solution solution;
  cplx gauge = 1.0;
  std::string description;
};
DtRecipe dt_recipe(FamilyId id, const FamilyParams& p);

// Evaluable handle: u and the denominator from the printed form; w from the
// print when available, else from the recipe, else eps for the x-independent
// line waves.
Solution catalog_solution(FamilyId id, const FamilyParams& p);

struct Asymptotics {
  cplx u_background, w_background;
  double max_deviation;  // max |u - u_background| on a 10 x 10 grid over [-1,1]^2
};
Asymptotics catalog_asymptotics(FamilyId id, const FamilyParams& p, double t);

// Auxiliary printed expressions used by the singularity analysis.
namespace aux {
// Real part of the two-rogue denominator at t = 0.  printed = true keeps
// the coefficients as printed; false gives the ones the determinant yields.
double two_rogue_sigma_s(double r1, double x, double y, bool printed);
double two_rogue_imag(double r1, double x, double y, double t);
// Imaginary part of the DS-II two-rational denominator and its P1 factor.
double two_rational_p1(double t);
double two_rational_imag(double x, double y, double t);
// Imaginary part of the DS-II fundamental denominator (r1 = 1, eps = 1, e1 = 0 read).
double ds2_fundamental_imag(double phi1, double x, double t);
// DS-II second-order u at complex (x, t), for the local DS-I map check.
cplx ds2_second_order_u(cplx x, double y, cplx t);
}  // namespace aux

}  // namespace ptds
