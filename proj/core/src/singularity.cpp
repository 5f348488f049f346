#include "ptds/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace ptds {

namespace {

bool near_multiple(double a, double period, double offset = 0.0) {
  const double k = std::round((a - offset) / period);
  return std::abs(a - offset - k * period) < 1e-9;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

struct Eval2 {
  const Solution& sol;
  double t;
  cplx operator()(double x, double y) const { return sol.denominator(Point{x, y, t}); }
};

// Solves Re = Im = 0 (or minimizes |den|^2) from (x, y) by damped Gauss-Newton.
std::array<double, 2> refine(const Eval2& f, double x, double y, const Box& box, bool damped) {
  double lambda = damped ? 1e-3 : 0.0;
  cplx d = f(x, y);
  for (int it = 0; it < 100 && std::abs(d) > 1e-15; ++it) {
    const double hx = 1e-7 * (1 + std::abs(x)), hy = 1e-7 * (1 + std::abs(y));
    const cplx dx = (f(x + hx, y) - f(x - hx, y)) / (2 * hx);
    const cplx dy = (f(x, y + hy) - f(x, y - hy)) / (2 * hy);
    Eigen::Matrix2d J;
    J << dx.real(), dy.real(), dx.imag(), dy.imag();
    const Eigen::Vector2d r(d.real(), d.imag());
    Eigen::Matrix2d A = J.transpose() * J;
    const Eigen::Vector2d g = J.transpose() * r;
    bool moved = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::Matrix2d M = A;
      M.diagonal() += lambda * A.diagonal() + Eigen::Vector2d::Constant(1e-300);
      const Eigen::Vector2d step = -M.ldlt().solve(g);
      if (!step.allFinite()) break;
      const double nx = std::clamp(x + step(0), box.xmin, box.xmax);
      const double ny = std::clamp(y + step(1), box.ymin, box.ymax);
      const cplx nd = f(nx, ny);
      if (std::abs(nd) < std::abs(d) || !damped) {
        const double len = std::hypot(nx - x, ny - y);
        x = nx, y = ny, d = nd;
        lambda = damped ? lambda / 3 : 0.0;
        moved = len > 1e-15 * (1 + std::abs(x) + std::abs(y));
        break;
      }
      lambda = std::max(lambda * 4, 1e-12);
    }
    if (!moved) break;
  }
  return {x, y};
}

}  // namespace

std::string Conic::type() const {
  const double disc = b * b - 4 * a * c;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1e-300});
  if (std::abs(disc) < 1e-12 * scale * scale) return "parabola";
  return disc > 0 ? "hyperbola" : "ellipse";
}

std::string kind_name(SingularityKind k) {
  switch (k) {
    case SingularityKind::point_time:
      return "point-time";
    case SingularityKind::interval:
      return "interval";
    default:
      return "none";
  }
}

SingularityReport ds1_critical_time(const FamilyParams& p) {
  if (p.r1 == 0.0) throw ParameterError("ds1_critical_time: r1 must be nonzero");
  if (!near_multiple(p.phi1, pi)) throw ParameterError("ds1_critical_time: needs phi1 = k pi (real lambda1)");
  const double r = p.r1, r2 = r * r, eps = p.epsilon;
  if (std::abs(r2 - 1) < 1e-12) throw ParameterError("ds1_critical_time: r1^2 = 1 has no hyperbola");
  const double pp = (r - eps / r) / 2, q = (r + eps / r) / 2;
  const long n = std::lround(p.phi1 / pi);
  const double s = (n + 1) % 2 == 0 ? 1.0 : -1.0;
  const double A = pp / (2 * q) + p.f1;

  SingularityReport rep;
  rep.kind = SingularityKind::point_time;
  rep.t_c = -2 * p.e1 * r2 / (1 + r2 * r2);
  rep.locus = Conic{-pp * pp, 0, q * q, 0, 2 * s * q * A, A * A + eps * r2 / ((eps + r2) * (eps + r2))};
  rep.notes = "hyperbola at t_c";
  if (p.epsilon == -1) {
    const double base = std::abs(r) / std::abs(r2 - 1);
    const double fac = 2 / (r2 - 1 / r2);
    double lo = (-base - p.e1) * fac, hi = (base - p.e1) * fac;
    if (lo > hi) std::swap(lo, hi);
    rep.kind = SingularityKind::interval;
    rep.interval = std::array<double, 2>{lo, hi};
    // Where F(0, y, t) actually vanishes: ((p^2+q^2) t + e1)^2 <= r^2/(r^2-1)^2.
    const double fac2 = 2 / (r2 + 1 / r2);
    double dlo = (-base - p.e1) * fac2, dhi = (base - p.e1) * fac2;
    if (dlo > dhi) std::swap(dlo, dhi);
    rep.notes += "; eps = -1: interval evaluated as printed with factor 2/(r1^2 - r1^-2); the zero set of "
                 "F(0, y, t) is [" + fmt(dlo) + ", " + fmt(dhi) + "] (factor 2/(r1^2 + r1^-2))";
  }
  return rep;
}

SingularityReport ds1_singularity(const FamilyParams& p) {
  SingularityReport rep;
  if (std::abs(p.r1 * p.r1 - 1) < 1e-12 && near_multiple(p.phi1, pi)) {
    rep.notes = p.epsilon == -1 ? "r1 = 1, eps = -1: trivial case, u = 1"
                                : "r1 = 1, eps = 1: x-independent line rogue wave, denominator >= 1/4";
    return rep;
  }
  if (near_multiple(p.phi1, pi, pi / 2)) {
    if (p.epsilon == -1) throw ParameterError("ds1: travelling branch with eps = -1 is not analysed");
    rep.notes = "phi1 = (2k-1)pi/2, eps = 1: nonsingular rational travelling wave";
    return rep;
  }
  if (near_multiple(p.phi1, pi)) return ds1_critical_time(p);
  throw ParameterError("ds1: only phi1 = k pi and phi1 = (2k-1)pi/2 are analysed");
}

std::array<double, 2> ds1_two_rogue_interval(double r1) {
  const double r = std::abs(r1), r2 = r1 * r1, r4 = r2 * r2;
  if (r == 0.0 || std::abs(r2 - 1) < 1e-12) throw ParameterError("ds1_two_rogue_interval: needs r1 != 0, r1^2 != 1");
  const double tp = r * r * r * std::sqrt(3 * (r2 - 1) * (r2 - 1) + 4 * r2) /
                    (std::abs(r2 - 1) * (r4 + 1) * std::sqrt(r4 - r2 + 1));
  return {-tp, tp};
}

SingularityReport ds2_critical_time(const FamilyParams& p) {
  if (p.epsilon != 1 || std::abs(p.r1 - 1) > 1e-12)
    throw ParameterError("ds2_critical_time: needs eps = 1, r1 = 1");
  SingularityReport rep;
  const double c = std::cos(p.phi1), s = std::sin(p.phi1), c2 = std::cos(2 * p.phi1);
  if (std::abs(c) < 1e-12) {
    rep.notes = "phi1 = (2k-1)pi/2: u = 1 identically";
    return rep;
  }
  if (std::abs(c2) < 1e-12) throw ParameterError("ds2_critical_time: cos(2 phi1) = 0");
  const double g = 2 * p.f1 + 1;
  rep.kind = SingularityKind::point_time;
  rep.t_c = (2 * p.e1 * c + s) / (-2 * c2 * c);
  const double s2 = std::sin(2 * p.phi1);
  rep.locus = Conic{-s2 * s2, 0, 4 * c * c * c * c, 0, 4 * g * c * c * c, g * g * c * c + 1};
  rep.notes = "locus (2y cos^2 phi1 + (2 f1 + 1) cos phi1)^2 - (x sin 2phi1)^2 + 1 = 0, a " + rep.locus->type();
  return rep;
}

std::array<double, 2> ds2_two_rational_interval() {
  const double s2 = std::sqrt(2.0);
  const double a = 16 * s2 - 20, b = 88 - 64 * s2, c = 52 * s2 - 73;
  const double disc = std::sqrt(b * b - 4 * a * c);
  // Stable form of the two roots.
  const double qd = -0.5 * (b + std::copysign(disc, b));
  double r1 = qd / a, r2 = c / qd;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

RidgeReport ridge_lines(FamilyId id, const FamilyParams& p) {
  RidgeReport rep;
  if (id == FamilyId::ds1_travelling) {
    if (!near_multiple(p.phi1, pi, pi / 2) || p.epsilon != 1 || p.r1 == 0.0)
      throw ParameterError("ridge_lines: DS-I needs phi1 = (2k-1)pi/2, eps = 1, r1 != 0");
    const long k = std::lround((2 * p.phi1 / pi + 1) / 2);
    const double sg = (k - 1) % 2 == 0 ? 1.0 : -1.0;
    const double r = p.r1, r2 = r * r;
    const double ax = (1 + r2) / r, ay = (1 - r2) / r, at = -(1 + r2 * r2) / r2;
    rep.l1 = {sg * ax, sg * ay, at, p.e1};
    rep.l2 = {-sg * ax, sg * ay, at, p.e1};
  } else if (id == FamilyId::ds2_travelling) {
    if (std::abs(p.f1 + 0.5) < 1e-14) throw ParameterError("ridge_lines: DS-II needs f1 != -1/2");
    const double c = std::cos(p.phi1), s = std::sin(p.phi1);
    rep.l1 = {2 * c * c, -std::sin(2 * p.phi1), 2 * c * std::cos(2 * p.phi1), s + p.e1};
    rep.l2 = {-2 * c * c, -std::sin(2 * p.phi1), 2 * c * std::cos(2 * p.phi1), s + p.e1};
    rep.angle_printed = 2 * p.phi1;
  } else {
    throw ParameterError("ridge_lines: only ds1_travelling and ds2_travelling have ridge lines");
  }
  const double dot = rep.l1.cx * rep.l2.cx + rep.l1.cy * rep.l2.cy;
  const double n1 = std::hypot(rep.l1.cx, rep.l1.cy), n2 = std::hypot(rep.l2.cx, rep.l2.cy);
  rep.angle_between = std::acos(std::min(1.0, std::abs(dot) / (n1 * n2)));
  return rep;
}

SingularityReport family_singularity(FamilyId id, const FamilyParams& p) {
  validate_params(id, p);
  SingularityReport rep;
  switch (id) {
    case FamilyId::ds1_fundamental:
      return ds1_singularity(p);
    case FamilyId::ds1_peregrine:
      rep.notes = "line rogue wave: denominator >= 1/4, nonsingular";
      return rep;
    case FamilyId::ds1_travelling: {
      FamilyParams q = p;
      return ds1_singularity(q);
    }
    case FamilyId::ds1_two_rogue:
      rep.kind = SingularityKind::interval;
      rep.interval = ds1_two_rogue_interval(p.r1);
      rep.notes = "singular points on y = 0 for t in the interval; at t = 0 the real part of the "
                  "denominator is Sigma_s (see catalog aux)";
      return rep;
    case FamilyId::ds2_fundamental:
      return ds2_critical_time(p);
    case FamilyId::ds2_line:
      rep.notes = "line rogue wave: denominator >= 1, nonsingular";
      return rep;
    case FamilyId::ds2_travelling:
      rep.notes = "eps = -1, r1 = 1, f1 != -1/2: nonsingular rational travelling wave";
      return rep;
    case FamilyId::ds2_two_rational:
      if (std::abs(p.phi2 - pi / 4) > 1e-12)
        throw ParameterError("ds2_two_rational: the analytic interval is only known for phi2 = pi/4");
      rep.kind = SingularityKind::interval;
      rep.interval = ds2_two_rational_interval();
      rep.notes = "roots of P1(c) = 16 sqrt2 c^2 - 20 c^2 - 64 sqrt2 c + 88 c + 52 sqrt2 - 73";
      return rep;
    default:
      throw ParameterError("no analytic singularity analysis for " + family_name(id));
  }
}

std::vector<BlowupPoint> locate_blowup(const Solution& sol, double t, const Box& box, int n) {
  if (n < 2) throw ParameterError("locate_blowup: n must be >= 2");
  const Eval2 f{sol, t};
  const std::size_t m = n + 1;
  std::vector<double> xs(m), ys(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = box.xmin + (box.xmax - box.xmin) * double(i) / n;
    ys[i] = box.ymin + (box.ymax - box.ymin) * double(i) / n;
  }
  std::vector<cplx> D(m * m);
  parallel_for(D.size(), [&](std::size_t k) { D[k] = f(xs[k % m], ys[k / m]); });
  auto at = [&](std::size_t i, std::size_t j) { return D[j * m + i]; };

  std::vector<BlowupPoint> found;
  auto keep = [&](double x, double y) {
    const double a = std::abs(f(x, y));
    if (a <= 1e-8) found.push_back({x, y, a});
  };
  auto bisect = [&](double x0, double y0, double x1, double y1) {
    double lo = 0, hi = 1;
    const double rlo = f(x0, y0).real();
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double rm = f(x0 + mid * (x1 - x0), y0 + mid * (y1 - y0)).real();
      if ((rm < 0) == (rlo < 0))
        lo = mid;
      else
        hi = mid;
    }
    const double s = 0.5 * (lo + hi);
    keep(x0 + s * (x1 - x0), y0 + s * (y1 - y0));
  };
  auto flips = [](double a, double b) { return (a < 0) != (b < 0); };

  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      if (at(i, j) == 0.0) keep(xs[i], ys[j]);
      if (i + 1 < m && flips(at(i, j).real(), at(i + 1, j).real())) bisect(xs[i], ys[j], xs[i + 1], ys[j]);
      if (j + 1 < m && flips(at(i, j).real(), at(i, j + 1).real())) bisect(xs[i], ys[j], xs[i], ys[j + 1]);
      if (i + 1 < m && j + 1 < m) {
        const cplx c[4] = {at(i, j), at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)};
        bool re = false, im = false;
        for (int a = 1; a < 4; ++a) {
          re |= flips(c[0].real(), c[a].real());
          im |= flips(c[0].imag(), c[a].imag());
        }
        if (re && im) {
          const auto z = refine(f, 0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1]), box, false);
          const double dx = xs[1] - xs[0], dy = ys[1] - ys[0];
          if (z[0] >= xs[i] - dx && z[0] <= xs[i + 1] + dx && z[1] >= ys[j] - dy && z[1] <= ys[j + 1] + dy)
            keep(z[0], z[1]);
        }
      }
    }

  std::sort(found.begin(), found.end(), [](const BlowupPoint& a, const BlowupPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<BlowupPoint> out;
  for (const auto& p : found) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend() && p.x - it->x < 1e-6; ++it)
      if (std::abs(p.y - it->y) < 1e-6) dup = true;
    if (!dup) out.push_back(p);
  }
  return out;
}

double min_abs_denominator(const Solution& sol, double t, const Box& box, int n) {
  const Eval2 f{sol, t};
  const std::size_t m = n + 1;
  std::vector<double> A(m * m);
  auto xat = [&](std::size_t i) { return box.xmin + (box.xmax - box.xmin) * double(i) / n; };
  auto yat = [&](std::size_t j) { return box.ymin + (box.ymax - box.ymin) * double(j) / n; };
  parallel_for(A.size(), [&](std::size_t k) { A[k] = std::abs(f(xat(k % m), yat(k / m))); });
  std::vector<std::size_t> order(A.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return A[a] < A[b]; });

  std::vector<std::size_t> starts;
  for (std::size_t k : order) {
    bool near = false;
    for (std::size_t s : starts) {
      const long di = long(k % m) - long(s % m), dj = long(k / m) - long(s / m);
      near |= std::abs(di) <= 2 && std::abs(dj) <= 2;
    }
    if (!near) starts.push_back(k);
    if (starts.size() == 8) break;
  }
  double best = A[order[0]];
  for (std::size_t k : starts) {
    const auto z = refine(f, xat(k % m), yat(k / m), box, true);
    best = std::min(best, std::abs(f(z[0], z[1])));
  }
  return best;
}

double numeric_critical_time(const Solution& sol, double t_lo, double t_hi, const Box& box) {
  if (!(t_hi > t_lo)) throw ParameterError("numeric_critical_time: empty time range");
  constexpr int scan = 41;
  std::vector<double> g(scan);
  for (int k = 0; k < scan; ++k) g[k] = min_abs_denominator(sol, t_lo + (t_hi - t_lo) * k / (scan - 1), box);
  const int k = int(std::min_element(g.begin(), g.end()) - g.begin());
  const double dt = (t_hi - t_lo) / (scan - 1);
  double a = t_lo + std::max(0, k - 1) * dt, b = t_lo + std::min(scan - 1, k + 1) * dt;
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double gc = min_abs_denominator(sol, c, box), gd = min_abs_denominator(sol, d, box);
  while (b - a > 1e-9) {
    if (gc < gd) {
      b = d, d = c, gd = gc;
      c = b - gr * (b - a);
      gc = min_abs_denominator(sol, c, box);
    } else {
      a = c, c = d, gc = gd;
      d = a + gr * (b - a);
      gd = min_abs_denominator(sol, d, box);
    }
  }
  return 0.5 * (a + b);
}

std::optional<std::array<double, 2>> numeric_singular_interval(const Solution& sol, double t_lo, double t_hi,
                                                               const Box& box, int n) {
  if (!(t_hi > t_lo)) throw ParameterError("numeric_singular_interval: empty time range");
  constexpr int scan = 121;
  // Presence of a located zero, not a threshold on min |den|: the denominator's
  // scale grows with the box, so no absolute threshold works for every box.
  auto inside = [&](double t) { return !locate_blowup(sol, t, box, n).empty(); };
  std::vector<double> ts(scan);
  std::vector<char> in(scan);
  for (int k = 0; k < scan; ++k) {
    ts[k] = t_lo + (t_hi - t_lo) * k / (scan - 1);
    in[k] = inside(ts[k]);
  }
  const auto first = std::find(in.begin(), in.end(), 1);
  if (first == in.end()) return std::nullopt;
  const int i0 = int(first - in.begin());
  const int i1 = scan - 1 - int(std::find(in.rbegin(), in.rend(), 1) - in.rbegin());
  auto edge = [&](double out_t, double in_t) {
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (out_t + in_t);
      (inside(mid) ? in_t : out_t) = mid;
    }
    return 0.5 * (out_t + in_t);
  };
  const double lo = i0 == 0 ? t_lo : edge(ts[i0 - 1], ts[i0]);
  const double hi = i1 == scan - 1 ? t_hi : edge(ts[i1 + 1], ts[i1]);
  return std::array<double, 2>{lo, hi};
}

}  // namespace ptds
