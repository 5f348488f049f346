// One PASS/FAIL line per acceptance criterion.  Exits 0 once every check has
// run; --strict makes any FAIL a nonzero exit.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

#include "ptds/catalog.hpp"
#include "ptds/ds2.hpp"
#include "ptds/quasidet.hpp"
#include "ptds/singularity.hpp"
#include "ptds/spectra.hpp"
#include "ptds/verify.hpp"
#include "support.hpp"

using namespace ptds;
using ptds::testing::random_matrix;
using ptds::testing::random_points;
using ptds::testing::random_sylvester;
using ptds::testing::rel;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::printf("[%2d] %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char* f, auto... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SpectralParams draw(std::mt19937& rng) {
  std::uniform_real_distribution<double> r(0.3, 2.5), ph(-2 * pi, 2 * pi), f(-2, 2);
  SpectralParams sp;
  sp.r = r(rng);
  sp.phi = ph(rng);
  sp.F = {f(rng), f(rng)};
  return sp;
}

GlobalParams globals(int k) {
  GlobalParams gp;
  gp.epsilon = k % 2 ? 1 : -1;
  gp.alpha_sq = (k / 2) % 2 ? 1 : -1;
  return gp;
}

void convergence(int n, FamilyId id, const FamilyParams& p, double t) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = convergence_order(catalog_solution(id, p), Box{}, t, 0.02);
  const double sec = seconds_since(t0);
  report(n, c.passed() && sec < 10,
         fmt("%s t=%g: order eq1 %.3f eq2 %.3f (h=0.02/0.01, need [1.7,2.3]); max residual %.2e/%.2e; %.2f s",
             family_name(id).c_str(), t, c.order_eq1, c.order_eq2, c.fine.max_eq1, c.fine.max_eq2, sec));
}

void criterion3() {
  FamilyParams p;
  p.phi1 = -pi / 6;
  const double tc = *ds2_critical_time(p).t_c;
  const double tn = numeric_critical_time(catalog_solution(FamilyId::ds2_fundamental, p), 0.0, 1.5, Box{});
  const double exact = std::sqrt(3.0) / 3;
  report(3, std::abs(tc - exact) <= 1e-9 && std::abs(tn - tc) <= 1e-4,
         fmt("ds2 critical time %.10f (sqrt3/3 %+.1e), numeric zero search %.10f (%+.1e)", tc, tc - exact, tn,
             tn - tc));
}

void criterion4() {
  const auto I = ds2_two_rational_interval();
  const auto J = ds1_two_rogue_interval(2);
  const bool i_ok = std::abs(I[0] - 0.326232) <= 1e-5 && std::abs(I[1] - 0.628852) <= 1e-5;
  const bool j_ok = std::abs(J[0] + 0.285287) <= 1e-5 && std::abs(J[1] - 0.285287) <= 1e-5;
  report(4, i_ok && j_ok,
         fmt("I_s = [%.7f, %.7f] vs [0.326232, 0.628852]: %s; two-rogue = [%.7f, %.7f] vs +-0.285287: %s", I[0],
             I[1], i_ok ? "ok" : "upper root of the quadratic is 0.6289523, off by 1.0e-4", J[0], J[1],
             j_ok ? "ok" : "off"));
}

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(-2, 2);
  const struct {
    FamilyId id;
    const char* variant;
  } cases[] = {{FamilyId::ds1_fundamental, "printed"},  {FamilyId::ds1_hybrid, "printed"},
               {FamilyId::ds1_hybrid, "corrected"},     {FamilyId::ds1_second_order, "printed"},
               {FamilyId::ds2_fundamental, "printed"},  {FamilyId::ds2_second_order, "printed"},
               {FamilyId::ds2_second_order, "corrected"}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    auto p = default_params(c.id);
    p.variant = c.variant;
    const auto rec = dt_recipe(c.id, p).solution;
    double worst = 0, worst_w = 0;
    for (int used = 0; used < 50;) {
      const Point pt{d(rng), d(rng), d(rng)};
      const auto a = catalog_eval(c.id, p, pt);
      const auto b = rec(pt);
      if (a.flag != Flag::regular || b.flag != Flag::regular) continue;
      worst = std::max(worst, rel(a.u, b.u));
      if (a.w) worst_w = std::max(worst_w, rel(*a.w, b.w));
      ++used;
    }
    const double m = std::max(worst, worst_w);
    // The verbatim variants with known slips are shown, but the criterion is
    // judged on the form that the construction reproduces.
    const bool judged = std::string(c.variant) != "printed" || (c.id != FamilyId::ds1_hybrid && c.id != FamilyId::ds2_second_order);
    if (judged) ok = ok && m <= 1e-8;
    detail += fmt(" %s/%s %.1e%s;", family_name(c.id).c_str(), c.variant, m, judged ? "" : " (verbatim, known slip)");
  }
  const double sec = seconds_since(t0);
  report(5, ok && sec < 30, fmt("catalog vs Darboux, 50 points each:%s %.2f s", detail.c_str(), sec));
}

void criterion6() {
  std::mt19937 rng(6);
  double sym = 0, inv = 0;
  for (int k = 0; k < 200; ++k) {
    const auto gp = globals(k);
    const auto th = make_eigen_matrix(make_superposed(draw(rng), gp), gp);
    const auto pts = random_points(rng, 5, 1.0);
    sym = std::max(sym, symmetry_defect(th, gp, pts));
    for (const auto& row : th.m)
      for (const auto& f : row)
        for (const auto& p : pts) inv = std::max(inv, std::abs(f.reflect_conj().reflect_conj()(p) - f(p)));
  }
  report(6, sym <= 1e-12 && inv <= 1e-12,
         fmt("200 draws: eigen-matrix symmetry defect %.1e, reflect-conjugation involution %.1e", sym, inv));
}

void criterion7() {
  std::mt19937 rng(7);
  int ratio_ok = 0, ratio_neg = 0, syl_ok = 0, syl_neg = 0;
  for (Eigen::Index b : {1, 2}) {
    const Eigen::Index n = 3 * b + b;
    for (int k = 0; k < 100; ++k) {
      const CMat m = random_matrix(rng, n, n);
      const CMat minor = m.topLeftCorner(n - b, n - b);
      const cplx q = quasidet(m, n - b, n - b, b).determinant();
      const cplx ratio = m.determinant() / minor.determinant();
      ratio_ok += std::abs(q - ratio) <= 1e-9 * std::abs(ratio);
      CMat off = m;
      off(0, 0) += 0.01;
      ratio_neg += std::abs(q - off.determinant() / minor.determinant()) > 1e-9 * std::abs(ratio);

      const auto s = random_sylvester(rng, b);
      syl_ok += sylvester_check(s);
      auto sides = sylvester_sides(s);
      sides.rhs(0, 0) += 0.01;
      syl_neg += sides.defect() > 1e-9;
    }
  }
  report(7, ratio_ok == 200 && ratio_neg == 200 && syl_ok == 200 && syl_neg == 200,
         fmt("100 scalar + 100 block: determinant ratio %d/200, Sylvester %d/200; negative controls caught %d/200, "
             "%d/200",
             ratio_ok, syl_ok, ratio_neg, syl_neg));
}

void criterion8() {
  std::mt19937 rng(8);
  double worst = 0;
  for (int k = 0; k < 40; ++k) {
    const auto sp = draw(rng);
    const auto gp = globals(k);
    const auto pts = random_points(rng, 50, 1.5);
    worst = std::max({worst, lax_residual(make_eigenfunction(sp, gp), gp, pts),
                      lax_residual(make_superposed(sp, gp), gp, pts)});
  }
  report(8, worst <= 1e-10, fmt("40 draws x 50 points, plain and superposed: max Lax residual %.1e", worst));
}

void criterion9() {
  FamilyParams p;
  p.epsilon = -1;
  p.phi1 = 0.9;
  std::mt19937 rng(9);
  bool trivial = true;
  for (const auto& pt : random_points(rng, 100, 5.0)) trivial = trivial && catalog_eval(FamilyId::ds1_fundamental, p, pt).u == cplx(1.0);

  const auto q = default_params(FamilyId::ds1_peregrine);
  const double h = 1e-3;
  double dx = 0;
  for (const auto& pt : random_points(rng, 100, 3.0)) {
    const cplx a = catalog_eval(FamilyId::ds1_peregrine, q, {pt.x + h, pt.y, pt.t}).u;
    const cplx b = catalog_eval(FamilyId::ds1_peregrine, q, {pt.x - h, pt.y, pt.t}).u;
    dx = std::max(dx, std::abs(a - b) / (2 * h));
  }
  const cplx peak = catalog_eval(FamilyId::ds1_peregrine, q, {0.7, 0, 0}).u;
  report(9, trivial && dx <= 1e-10 && std::abs(peak + 3.0) <= 1e-12,
         fmt("r1=1, eps=-1: u == 1 exactly at 100 points: %s; Peregrine max|du/dx| %.1e, peak %.15g%+.1ei",
             trivial ? "yes" : "no", dx, peak.real(), peak.imag()));
}

void criterion10() {
  std::mt19937 rng(10);
  std::uniform_real_distribution<double> r(0.5, 2), ph(-pi, pi), f(-1, 1);
  double worst = 0;
  int count = 0;
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k < 10; ++k) {
      GlobalParams gp;
      gp.alpha_sq = -1;
      gp.epsilon = k % 2 ? 1 : -1;
      std::vector<Column> th, phis;
      for (int i = 0; i < n; ++i) {
        SpectralParams sp;
        sp.r = r(rng);
        sp.phi = ph(rng);
        sp.F = {f(rng), f(rng)};
        const auto e = make_superposed(sp, gp);
        th.push_back({e.xi, e.eta});
        phis.push_back(make_adjoint(th.back(), gp));
      }
      for (const auto& p : random_points(rng, 5, 1.0)) {
        worst = std::max(worst, remark_identity(th, phis, {}, p).rel);
        ++count;
      }
    }
  report(10, worst <= 1e-8, fmt("trace of boxed quasi-determinant vs -d_x log det Omega, n=1,2, %d samples: max rel %.1e",
                                count, worst));
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  FamilyParams p1;
  p1.phi1 = 2 * pi;
  p1.r1 = 2;
  p1.f1 = 1;
  convergence(1, FamilyId::ds1_fundamental, p1, -0.5);
  FamilyParams p2;
  p2.phi1 = -pi / 6;
  convergence(2, FamilyId::ds2_fundamental, p2, 0.0);
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria pass\n", 10 - failures);
  return strict && failures ? 1 : 0;
}
