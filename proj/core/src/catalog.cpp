#include "ptds/catalog.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "ptds/ds1.hpp"
#include "ptds/ds2.hpp"

namespace ptds {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double den_tol = 1e-12;

const std::vector<FamilyInfo>& infos() {
  static const std::vector<FamilyInfo> v = {
      {FamilyId::ds1_fundamental, "ds1_fundamental", "ds1", {"epsilon", "r1", "phi1", "e1", "f1"},
       {"printed"}, true, true, false, true, true,
       "first-order rational solution; r1 = 1, eps = -1 is the trivial limit u = 1"},
      {FamilyId::ds1_peregrine, "ds1_peregrine", "ds1", {"e1", "f1", "sign"}, {"printed"}, true,
       false, false, true, true,
       "x-independent line rogue wave (r1 = 1, eps = 1); sign selects (y + f1) or (y - f1); w = eps"},
      {FamilyId::ds1_travelling, "ds1_travelling", "ds1", {"epsilon", "r1", "phi1", "e1", "f1"},
       {"printed", "reduced"}, true, true, false, false, true,
       "first-order solution on phi1 = (2k-1)pi/2; variant reduced is the printed r1 = 1 form, "
       "which equals the printed general form with f1 -> -f1"},
      {FamilyId::ds1_two_rogue, "ds1_two_rogue", "ds1", {"epsilon", "r1"}, {"printed"}, true, false,
       true, true, true,
       "no printed u: N = 2 determinant with phi1 = phi2 = 2pi, r2 = 1/r1, F1 = F2 = 0; the printed "
       "Sigma_s has wrong x^2 and y^2 coefficients (variant-free, see aux)"},
      {FamilyId::ds1_hybrid, "ds1_hybrid", "ds1", {"e2", "f2"}, {"printed", "corrected"}, true, false,
       false, false, true,
       "printed G has two slips: missing +4y^2 in the first bracket and (i e2 - 1)^2 for "
       "(i e2 + 1)^2; variant corrected fixes both"},
      {FamilyId::ds1_second_order, "ds1_second_order", "ds1", {"e1"}, {"printed"}, true, false, false,
       true, true, "the printed numerator token \"e\" is read as e1"},
      {FamilyId::ds2_fundamental, "ds2_fundamental", "ds2", {"epsilon", "r1", "phi1", "e1", "f1"},
       {"printed"}, true, true, false, true, true, "cos(phi1) = 0 rejected"},
      {FamilyId::ds2_line, "ds2_line", "ds2", {}, {"printed"}, true, false, false, true, true,
       "line rogue wave (r1 = 1, phi1 = k pi); w = eps"},
      {FamilyId::ds2_travelling, "ds2_travelling", "ds2", {"phi1", "e1", "f1"}, {"printed"}, true,
       true, false, false, true, "first-order solution at eps = -1, r1 = 1; f1 = -1/2 rejected"},
      {FamilyId::ds2_two_rational, "ds2_two_rational", "ds2", {"phi2"}, {"printed"}, true, false,
       true, true, true,
       "no printed u: n = 2 binary transformation with phi1 = 2pi, r1 = r2 = 1, F1 = F2 = 0"},
      {FamilyId::ds2_second_order, "ds2_second_order", "ds2", {}, {"printed", "corrected"}, true, true,
       false, true, true, "printed w is the negative of the true w; variant corrected negates it"},
      {FamilyId::ds2_local_ds1_map, "ds2_local_ds1_map", "ds1", {}, {"printed"}, true, false, false,
       true, false,
       "second-order solution under x -> -ix, t -> -t; solves the local DS-I system, not the "
       "nonlocal one"},
  };
  return v;
}

bool near_multiple(double a, double period, double offset = 0.0) {
  const double k = std::round((a - offset) / period);
  return std::abs(a - offset - k * period) < 1e-9;
}

// p1, q1 for the DS-I closed form.
struct PQ {
  double p, q;
};
PQ ds1_pq(const FamilyParams& p) {
  return {(p.r1 - p.epsilon / p.r1) / 2, (p.r1 + p.epsilon / p.r1) / 2};
}
PQ ds2_pq(const FamilyParams& p) {
  return {(p.r1 + p.epsilon / p.r1) / 2, (p.r1 - p.epsilon / p.r1) / 2};
}

CatalogValue finish(cplx num_u, cplx den, std::optional<cplx> w) {
  if (!(std::abs(den) >= den_tol)) return {nan, std::nullopt, Flag::singular, den};
  return {num_u, w, Flag::regular, den};
}

// First-order DS-I closed form (u and w).
CatalogValue ds1_first_order(const FamilyParams& p, const Point& pt) {
  const auto [p1, q1] = ds1_pq(p);
  if (std::abs(q1) < 1e-14) return {1.0, cplx(p.epsilon), Flag::regular, 1.0};
  const double c = std::cos(p.phi1), s = std::sin(p.phi1);
  const cplx F1 = -I * p1 * pt.x * c - p1 * pt.y * s + (p1 * p1 + q1 * q1) * pt.t * std::cos(2 * p.phi1) + p.e1;
  const cplx F2 = I * q1 * pt.x * s - q1 * pt.y * c - 2 * p1 * q1 * pt.t * std::sin(2 * p.phi1) + p1 / (2 * q1) + p.f1;
  const double eps = p.epsilon, r2 = p.r1 * p.r1;
  const cplx F = F1 * F1 + F2 * F2 + eps * r2 / ((eps + r2) * (eps + r2));
  const cplx F1x = -I * p1 * c, F2x = I * q1 * s;
  const cplx Fx = 2.0 * (F1 * F1x + F2 * F2x), Fxx = 2.0 * (F1x * F1x + F2x * F2x);
  const cplx w = eps - 2.0 * (Fxx / F - (Fx / F) * (Fx / F));
  return finish(1.0 - (2.0 * I * F1 + 1.0) / F, F, w);
}

// First-order DS-II closed form (u and w).
CatalogValue ds2_first_order(const FamilyParams& p, const Point& pt) {
  const auto [p1, q1] = ds2_pq(p);
  const double c = std::cos(p.phi1), s = std::sin(p.phi1);
  const cplx G = I * p1 * pt.x * s - q1 * pt.y * s + (p1 * p1 + q1 * q1) * pt.t * std::cos(2 * p.phi1) +
                 (p.e1 + 0.5 * std::tan(p.phi1));
  const cplx H = I * q1 * pt.x * c - p1 * pt.y * c - 2 * p1 * q1 * pt.t * std::sin(2 * p.phi1) - (p.f1 + 0.5);
  const cplx F = G * G + H * H + 1.0 / (4 * c * c);
  const cplx Gx = I * p1 * s, Hx = I * q1 * c;
  const cplx Fx = 2.0 * (G * Gx + H * Hx), Fxx = 2.0 * (Gx * Gx + Hx * Hx);
  const cplx w = double(p.epsilon) + 2.0 * (Fxx / F - (Fx / F) * (Fx / F));
  return finish(1.0 - (2.0 * I * G + 1.0) / F, F, w);
}

cplx den52(cplx x, double y, cplx t) {
  const cplx t2 = t * t;
  return 16.0 * (t2 * t2 + t2 * (-2.0 * I * x + 2 * y * y + 0.5) + (I * x + y * y) * (I * x + y * y)) +
         8.0 * I * x + 24 * y * y + 5.0;
}

cplx num52(cplx x, double y, cplx t) {
  return 8.0 * (1.0 + 2.0 * I * t) * (4.0 * I * t * (1.0 + I * t) + 4.0 * I * x - 4 * y * y + 1.0);
}

CatalogValue eval_printed(FamilyId id, const FamilyParams& p, const Point& pt) {
  const double x = pt.x, y = pt.y, t = pt.t;
  switch (id) {
    case FamilyId::ds1_fundamental:
      return ds1_first_order(p, pt);
    case FamilyId::ds1_peregrine: {
      const double den = (y + p.sign * p.f1) * (y + p.sign * p.f1) + (t + p.e1) * (t + p.e1) + 0.25;
      return finish(1.0 - (2.0 * I * t + 2.0 * I * p.e1 + 1.0) / den, den, std::nullopt);
    }
    case FamilyId::ds1_travelling: {
      if (p.variant == "reduced") {
        const cplx xf = x + I * p.f1;
        const cplx den = 4 * (p.e1 - t) * (p.e1 - t) - 4.0 * xf * xf + 1.0;
        return finish(1.0 + 4.0 * I * (2 * t - 2 * p.e1 + I) / den, den, std::nullopt);
      }
      return ds1_first_order(p, pt);
    }
    case FamilyId::ds1_hybrid: {
      const double e2 = p.e2;
      const cplx xf = x + I * p.f2;
      const cplx F = 4 * y * y * (1 + 4 * (e2 - t) * (e2 - t)) - (16 * y * y + 16 * t * t + 4) * xf * xf +
                     std::pow(-4 * t * t + 4 * t * e2 + 3, 2) + 4 * e2 * e2;
      const bool fix = p.variant == "corrected";
      const cplx a = (2.0 * t - 2.0 * I) * (2.0 * t - 2.0 * I) + 1.0 + (fix ? 4 * y * y : 0.0);
      const cplx b = (2 * t - e2) * (2 * t - e2) + std::pow(I * e2 + (fix ? 1.0 : -1.0), 2) - 4.0;
      const cplx c = (2 * t - e2) * (2 * t - e2) + std::pow(I * e2 + 3.0, 2) - 4.0;
      const cplx d = 4.0 * std::pow(I * (e2 - t) + 1.0, 2) - 1.0;
      const cplx G = 4.0 * a * xf * xf - b * c + 4.0 * d * y * y;
      return finish(G / F, F, std::nullopt);
    }
    case FamilyId::ds1_second_order: {
      const double e1 = p.e1;
      const cplx Z = -I * x + y, Zm = -I * x - y;
      const cplx num = 16.0 * (1.0 + 2.0 * I * e1) * (Z * Z + 4 * t) +
                       16.0 * I * (2 * x * x + 2 * y * y + 4 * e1 * e1 * e1 + e1) + 24 * (4 * e1 * e1 + 1);
      const cplx den = std::pow(8 * t - 2.0 * Z * Z + 4 * e1 * e1 + 3.0, 2) +
                       2.0 * std::pow(4 * e1 * Z - 2.0 * Zm, 2) + 8.0 * Z * Z + 16 * e1 * e1;
      return finish(-1.0 + num / den, den, std::nullopt);
    }
    case FamilyId::ds2_fundamental:
    case FamilyId::ds2_travelling:
      return ds2_first_order(p, pt);
    case FamilyId::ds2_line: {
      const double den = 4 * t * t + 4 * y * y + 1;
      return finish(1.0 - 4.0 * (1.0 + 2.0 * I * t) / den, den, std::nullopt);
    }
    case FamilyId::ds2_second_order: {
      const cplx den = den52(x, y, t);
      const double t2 = t * t;
      const cplx wnum = 64.0 * (-16.0 * (t2 * t2 + t2 * (-2.0 * I * x - 6 * y * y - 1.5) +
                                         (I * x + y * y) * (I * x + y * y)) -
                                8.0 * I * x + 8 * y * y + 3.0);
      cplx w = -1.0 + wnum / (den * den);
      if (p.variant == "corrected") w = -w;
      return finish(1.0 + num52(x, y, t) / den, den, w);
    }
    case FamilyId::ds2_local_ds1_map: {
      const double t2 = t * t;
      const cplx num = 8.0 * (1.0 - 2.0 * I * t) * (-4.0 * I * t * (1.0 - I * t) + 4 * x - 4 * y * y + 1.0);
      const double den = 16 * (t2 * t2 + t2 * (-2 * x + 2 * y * y + 0.5) + (x + y * y) * (x + y * y)) + 8 * x +
                         24 * y * y + 5;
      return finish(1.0 + num / den, den, std::nullopt);
    }
    default:
      throw ParameterError("family has no printed closed form: " + family_name(id));
  }
}

// Pins the parameters a family fixes by definition.
FamilyParams normalized(FamilyId id, FamilyParams p) {
  if (id == FamilyId::ds2_travelling) p.epsilon = -1, p.r1 = 1;
  if (id == FamilyId::ds1_peregrine) p.epsilon = 1;
  return p;
}

SpectralParams spec(double r, double phi, cplx F) {
  SpectralParams sp;
  sp.r = r;
  sp.phi = phi;
  sp.F = F;
  return sp;
}

Solution ds1_n(const std::vector<SpectralParams>& sps, const GlobalParams& gp) {
  std::vector<EigenMatrix> e;
  for (const auto& sp : sps) e.push_back(make_eigen_matrix(make_superposed(sp, gp), gp));
  return ds1_solution(e, gp);
}

}  // namespace

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> v = [] {
    std::vector<FamilyId> out;
    for (const auto& i : infos()) out.push_back(i.id);
    return out;
  }();
  return v;
}

const FamilyInfo& family_info(FamilyId id) { return infos()[static_cast<std::size_t>(id)]; }

std::string family_name(FamilyId id) { return family_info(id).name; }

FamilyId family_from_name(const std::string& name) {
  for (const auto& i : infos())
    if (i.name == name) return i.id;
  throw ParameterError("unknown family: " + name);
}

FamilyParams default_params(FamilyId id) {
  FamilyParams p;
  switch (id) {
    case FamilyId::ds1_fundamental:
      p.r1 = 2, p.phi1 = 2 * pi, p.e1 = 0, p.f1 = 1;
      break;
    case FamilyId::ds1_travelling:
      p.r1 = 2, p.phi1 = pi / 2, p.e1 = 0, p.f1 = 1;
      break;
    case FamilyId::ds1_two_rogue:
      p.r1 = 2;
      break;
    case FamilyId::ds1_hybrid:
      p.e2 = 10, p.f2 = 2;
      break;
    case FamilyId::ds2_fundamental:
      p.r1 = 1, p.phi1 = -pi / 6;
      break;
    case FamilyId::ds2_travelling:
      p.epsilon = -1, p.r1 = 1, p.phi1 = pi / 6, p.e1 = 1, p.f1 = 0;
      break;
    case FamilyId::ds2_two_rational:
      p.phi2 = pi / 4;
      break;
    default:
      break;
  }
  return p;
}

GlobalParams family_globals(FamilyId id, const FamilyParams& p) {
  const auto& info = family_info(id);
  GlobalParams gp;
  gp.alpha_sq = info.equation == "ds1" ? 1 : -1;
  gp.rho = 1.0;
  switch (id) {
    case FamilyId::ds1_fundamental:
    case FamilyId::ds1_travelling:
    case FamilyId::ds1_two_rogue:
    case FamilyId::ds2_fundamental:
      gp.epsilon = p.epsilon;
      break;
    case FamilyId::ds2_travelling:
      gp.epsilon = -1;
      break;
    default:
      gp.epsilon = 1;
  }
  return gp;
}

void validate_params(FamilyId id, const FamilyParams& p) {
  const auto& info = family_info(id);
  bool known = false;
  for (const auto& v : info.variants) known |= v == p.variant;
  if (!known) throw ParameterError(info.name + ": unknown variant '" + p.variant + "'");
  if (p.epsilon != 1 && p.epsilon != -1) throw ParameterError("epsilon must be +1 or -1");
  auto needs_r1 = [&] {
    if (!(p.r1 != 0.0) || !std::isfinite(p.r1)) throw ParameterError(info.name + ": r1 must be nonzero");
  };
  switch (id) {
    case FamilyId::ds1_fundamental:
      needs_r1();
      if (p.epsilon == -1 && std::abs(p.r1 * p.r1 - 1) < 1e-14) break;  // trivial limit
      if (std::abs(p.r1 * p.r1 + p.epsilon) < 1e-14) throw ParameterError("ds1_fundamental: eps + r1^2 = 0");
      break;
    case FamilyId::ds1_peregrine:
      if (p.sign != 1 && p.sign != -1) throw ParameterError("ds1_peregrine: sign must be +1 or -1");
      break;
    case FamilyId::ds1_travelling:
      needs_r1();
      if (!near_multiple(p.phi1, pi, pi / 2))
        throw ParameterError("ds1_travelling: phi1 must be (2k-1)pi/2");
      if (p.variant == "reduced" && (std::abs(p.r1 - 1) > 1e-14 || p.epsilon != 1))
        throw ParameterError("ds1_travelling: the reduced form needs r1 = 1, eps = 1");
      if (std::abs(p.r1 * p.r1 + p.epsilon) < 1e-14) throw ParameterError("ds1_travelling: eps + r1^2 = 0");
      break;
    case FamilyId::ds1_two_rogue:
      needs_r1();
      if (std::abs(p.r1 * p.r1 - 1) < 1e-12) throw ParameterError("ds1_two_rogue: r1^2 = 1 makes the two eigenfunctions coincide");
      break;
    case FamilyId::ds2_fundamental:
      needs_r1();
      if (std::abs(std::cos(p.phi1)) < 1e-12) throw ParameterError("ds2_fundamental: cos(phi1) = 0 (u = 1 identically)");
      break;
    case FamilyId::ds2_travelling:
      if (std::abs(std::cos(p.phi1)) < 1e-12) throw ParameterError("ds2_travelling: cos(phi1) = 0");
      if (std::abs(p.f1 + 0.5) < 1e-14) throw ParameterError("ds2_travelling: f1 = -1/2 excluded");
      break;
    case FamilyId::ds2_two_rational:
      ds2_parameter_guard({spec(1, 2 * pi, 0.0), spec(1, p.phi2, 0.0)});
      break;
    default:
      break;
  }
}

CatalogValue catalog_eval(FamilyId id, const FamilyParams& p, const Point& pt) {
  validate_params(id, p);
  if (family_info(id).dt_backed) {
    const Solution s = dt_recipe(id, p).solution;
    const Sample v = s(pt);
    return {v.u, v.w, v.flag, s.denominator(pt)};
  }
  return eval_printed(id, normalized(id, p), pt);
}

DtRecipe dt_recipe(FamilyId id, const FamilyParams& p) {
  validate_params(id, p);
  const GlobalParams gp = family_globals(id, p);
  DtRecipe r;
  switch (id) {
    case FamilyId::ds1_fundamental:
    case FamilyId::ds1_travelling: {
      if (p.variant == "reduced") {
        r.solution = ds1_n({spec(1, pi / 2, p.e1 + I * p.f1)}, gp);
        r.description = "N = 1 determinant, r1 = 1, phi1 = pi/2, F = e1 + i f1";
        break;
      }
      const auto [p1, q1] = ds1_pq(p);
      if (std::abs(q1) < 1e-14) {
        r.solution = Solution::seed(gp);
        r.description = "trivial limit F -> infinity: the seed";
        break;
      }
      r.gauge = -std::exp(2.0 * I * p.phi1);
      r.solution = ds1_n({spec(p.r1, p.phi1, p.e1 - I * (p.f1 + p1 / q1))}, gp).gauged(r.gauge);
      r.description = "N = 1 determinant, F = e1 - i(f1 + p1/q1), gauge -exp(2 i phi1)";
      break;
    }
    case FamilyId::ds1_peregrine: {
      const double phi = p.sign == 1 ? pi : 0.0;
      r.gauge = -1.0;
      r.solution = ds1_n({spec(1, phi, p.e1 - I * p.f1)}, gp).gauged(r.gauge);
      r.description = "N = 1 determinant, r1 = 1, phi1 = pi (sign +1) or 0 (sign -1), F = e1 - i f1, gauge -1";
      break;
    }
    case FamilyId::ds1_two_rogue:
      r.solution = ds1_n({spec(p.r1, 2 * pi, 0.0), spec(1 / p.r1, 2 * pi, 0.0)}, gp);
      r.description = "N = 2 determinant, phi1 = phi2 = 2pi, r2 = 1/r1, F1 = F2 = 0";
      break;
    case FamilyId::ds1_hybrid:
      r.solution = ds1_n({spec(1, pi, 0.0), spec(1, pi / 2, p.e2 + I * p.f2)}, gp);
      r.description = "N = 2 determinant, (r, phi, F) = (1, pi, 0), (1, pi/2, e2 + i f2)";
      break;
    case FamilyId::ds1_second_order:
      r.solution = ds1_highorder({spec(1, pi / 4, p.e1)}, {1}, gp);
      r.description = "generalized transformation, one eigenfunction with one derivative column, phi1 = pi/4, F = e1";
      break;
    case FamilyId::ds2_fundamental:
    case FamilyId::ds2_travelling: {
      const double r1 = id == FamilyId::ds2_travelling ? 1.0 : p.r1;
      r.gauge = -std::exp(2.0 * I * p.phi1);
      r.solution = ds2_solution({spec(r1, p.phi1, p.e1 + I * (p.f1 + 0.5))}, gp).gauged(r.gauge);
      r.description = "n = 1 binary transformation, F = e1 + i(f1 + 1/2), constants 0, gauge -exp(2 i phi1)";
      break;
    }
    case FamilyId::ds2_line:
      r.gauge = -1.0;
      r.solution = ds2_solution({spec(1, 0.0, 0.0)}, gp).gauged(r.gauge);
      r.description = "n = 1 binary transformation, r1 = 1, phi1 = 0, F = 0, gauge -1";
      break;
    case FamilyId::ds2_two_rational:
      r.solution = ds2_solution({spec(1, 2 * pi, 0.0), spec(1, p.phi2, 0.0)}, gp);
      r.description = "n = 2 binary transformation, phi1 = 2pi, r1 = r2 = 1, F1 = F2 = 0, constants 0";
      break;
    case FamilyId::ds2_second_order:
      r.solution = ds2_highorder({spec(1, 2 * pi, 0.0)}, {2}, {}, gp);
      r.description = "generalized binary transformation, multiplicity 2, phi1 = 2pi, F = 0, constants 0";
      break;
    case FamilyId::ds2_local_ds1_map:
      throw ParameterError("ds2_local_ds1_map solves the local DS-I system; no nonlocal construction");
  }
  r.solution.meta()["family"] = family_name(id);
  r.solution.meta()["recipe"] = r.description;
  return r;
}

Solution catalog_solution(FamilyId id, const FamilyParams& p) {
  validate_params(id, p);
  const auto& info = family_info(id);
  const GlobalParams gp = family_globals(id, p);
  if (info.dt_backed) {
    Solution s = dt_recipe(id, p).solution;
    s.meta()["source"] = "catalog (dt-backed)";
    return s;
  }
  const FamilyParams q = normalized(id, p);
  auto f = [id, q](const Point& pt) {
    const CatalogValue v = eval_printed(id, q, pt);
    return Sample{v.u, v.w.value_or(0.0), v.w.has_value(), v.flag};
  };
  auto den = [id, q](const Point& pt) { return eval_printed(id, q, pt).denom; };
  Solution s(gp, f, den, {{"source", "catalog"}, {"family", info.name}, {"variant", p.variant}});
  const bool printed_w = info.has_w && !(id == FamilyId::ds1_travelling && p.variant == "reduced");
  if (printed_w) return s;
  if (id == FamilyId::ds1_peregrine || id == FamilyId::ds2_line) {
    const double eps = gp.epsilon;
    Solution out(gp, [f, eps](const Point& pt) { Sample v = f(pt); v.w = eps; v.has_w = true; return v; }, den,
                 s.meta());
    out.meta()["w"] = "eps (x-independent)";
    return out;
  }
  if (!info.nonlocal) return s;
  Solution out = s.with_w_from(dt_recipe(id, p).solution);
  out.meta()["w"] = "from the Darboux construction";
  return out;
}

Asymptotics catalog_asymptotics(FamilyId id, const FamilyParams& p, double t) {
  const auto& info = family_info(id);
  if (!info.rogue) throw ParameterError(info.name + " is not a rogue-wave family");
  const GlobalParams gp = family_globals(id, p);
  cplx ub = 1.0;
  if (id == FamilyId::ds1_second_order) ub = -1.0;
  if (id == FamilyId::ds2_two_rational) ub = std::exp(-2.0 * I * p.phi2);
  const Solution s = catalog_solution(id, p);
  double dev = 0.0;
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i < 10; ++i) {
      const Point pt{-1.0 + 2.0 * i / 9, -1.0 + 2.0 * j / 9, t};
      dev = std::max(dev, std::abs(s(pt).u - ub));
    }
  return {ub, cplx(gp.epsilon), dev};
}

namespace aux {

double two_rogue_sigma_s(double r1, double x, double y, bool printed) {
  const double r2 = r1 * r1, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
  const double core = x * x * r2 * (r2 - 1) * (r2 - 1) - y * y * r2 * (r2 + 1) * (r2 + 1) + 3 * r4;
  if (printed) return core * core + 24 * y * y * r8 - 12 * x * x * r6 * (r4 + 1);
  return core * core + 16 * y * y * r8 - 4 * x * x * r6 * (3 * r4 - 2 * r2 + 3);
}

double two_rogue_imag(double r1, double x, double y, double t) {
  const double r4 = std::pow(r1, 4);
  return 16 * x * y * t * r4 * (r4 + 1) * (r4 + 1);
}

double two_rational_p1(double t) {
  const double s2 = std::sqrt(2.0);
  return 4 * t * (4 * s2 * t - 5 * t - 16 * s2 + 22) + 52 * s2 - 73;
}

double two_rational_imag(double x, double y, double t) {
  return 4 * x * (4 * (4 * std::sqrt(2.0) - 5) * y * y + two_rational_p1(t));
}

double ds2_fundamental_imag(double phi1, double x, double t) {
  return x * std::sin(phi1) * (std::tan(phi1) + 2 * t * std::cos(2 * phi1));
}

cplx ds2_second_order_u(cplx x, double y, cplx t) { return 1.0 + num52(x, y, t) / den52(x, y, t); }

}  // namespace aux

}  // namespace ptds
