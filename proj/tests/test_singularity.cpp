#include "doctest.h"
#include "ptds/singularity.hpp"
#include "support.hpp"

using namespace ptds;

namespace {

FamilyParams ds1(double r1, double phi1, double e1, double f1, int eps = 1) {
  FamilyParams p;
  p.epsilon = eps;
  p.r1 = r1;
  p.phi1 = phi1;
  p.e1 = e1;
  p.f1 = f1;
  return p;
}

const Box wide{-5, 5, -5, 5};

}  // namespace

TEST_CASE("DS-I critical time") {
  CHECK(*ds1_critical_time(ds1(2, 2 * pi, 0, 0)).t_c == 0.0);
  CHECK(std::abs(*ds1_critical_time(ds1(2, 2 * pi, 1, 0)).t_c + 8.0 / 17) < 1e-12);
  CHECK_THROWS_AS(ds1_critical_time(ds1(1, 2 * pi, 0, 0)), ParameterError);
}

TEST_CASE("DS-I hyperbola where the affine term vanishes") {
  const auto rep = ds1_critical_time(ds1(2, 2 * pi, 0, 1));
  REQUIRE(rep.locus);
  CHECK(rep.locus->type() == "hyperbola");
  CHECK(std::abs((*rep.locus)(8.0 / 15, 1.04)) < 1e-12);
  CHECK(std::abs((*rep.locus)(-8.0 / 15, 1.04)) < 1e-12);
  CHECK(std::abs((*rep.locus)(0.6, 1.04)) > 1e-3);
}

TEST_CASE("DS-I branches without a critical time") {
  CHECK(ds1_singularity(ds1(1, 0, 0, 0, -1)).kind == SingularityKind::none);
  CHECK(ds1_singularity(ds1(2, pi / 2, 0, 0)).kind == SingularityKind::none);
  CHECK(ds1_singularity(ds1(2, 0, 0, 0, -1)).kind == SingularityKind::interval);
}

TEST_CASE("two-rogue interval") {
  const auto a = ds1_two_rogue_interval(2);
  CHECK(std::abs(a[1] - 0.285287) < 1e-5);
  CHECK(a[0] == -a[1]);
  const auto b = ds1_two_rogue_interval(0.5);
  CHECK(std::abs(b[1] - a[1]) < 1e-12);
  CHECK_THROWS_AS(ds1_two_rogue_interval(1), ParameterError);
  CHECK(ds1_two_rogue_interval(1.001)[1] > 100);
}

TEST_CASE("two-rogue denominator at t = 0") {
  const auto sol = catalog_solution(FamilyId::ds1_two_rogue, default_params(FamilyId::ds1_two_rogue));
  std::mt19937 rng(89);
  std::uniform_real_distribution<double> d(-2, 2);
  double ratio = 0, spread = 0;
  for (int k = 0; k < 30; ++k) {
    const double x = d(rng), y = d(rng);
    const cplx den = sol.denominator({x, y, 0});
    CHECK(std::abs(den.imag()) <= 1e-10 * std::abs(den));
    const double r = den.real() / aux::two_rogue_sigma_s(2, x, y, false);
    if (k == 0) ratio = r;
    spread = std::max(spread, std::abs(r / ratio - 1));
  }
  CHECK(spread < 1e-9);
  // The printed coefficients of the quadratic terms do not give a multiple.
  CHECK(std::abs(aux::two_rogue_sigma_s(2, 1, 0.5, true) - aux::two_rogue_sigma_s(2, 1, 0.5, false)) > 1);
}

TEST_CASE("DS-II critical time and ellipse") {
  FamilyParams p;
  p.phi1 = -pi / 6;
  const auto rep = ds2_critical_time(p);
  CHECK(rep.kind == SingularityKind::point_time);
  CHECK(std::abs(*rep.t_c - std::sqrt(3.0) / 3) < 1e-12);
  p.phi1 = pi / 2;
  CHECK(ds2_critical_time(p).kind == SingularityKind::none);
  CHECK_FALSE(ds2_critical_time(p).locus);
  // x = 0: the real part never vanishes.
  p.phi1 = -pi / 6;
  const auto sol = catalog_solution(FamilyId::ds2_fundamental, p);
  for (double y = -3; y <= 3; y += 0.05) CHECK(std::abs(sol.denominator({0, y, *rep.t_c})) > 1e-3);
}

TEST_CASE("two-rational quadratic") {
  const auto I = ds2_two_rational_interval();
  const double s2 = std::sqrt(2.0);
  for (double c : I) CHECK(std::abs((16 * s2 - 20) * c * c + (88 - 64 * s2) * c + 52 * s2 - 73) <= 1e-9);
  CHECK(std::abs(I[0] - 0.326232) < 1e-5);
  CHECK(aux::two_rational_p1(I[0]) == doctest::Approx(0).epsilon(1e-9));
}

TEST_CASE("two-rational denominator has zeros inside the interval only") {
  const auto sol = catalog_solution(FamilyId::ds2_two_rational, default_params(FamilyId::ds2_two_rational));
  CHECK(min_abs_denominator(sol, 0.4, wide) <= 1e-6);
  CHECK(min_abs_denominator(sol, 0.7, wide) > 1e-3);
}

TEST_CASE("ridge lines") {
  FamilyParams p;
  p.epsilon = -1;
  p.phi1 = pi / 6;
  p.e1 = 1;
  const auto r = ridge_lines(FamilyId::ds2_travelling, p);
  CHECK(r.l1.cx == doctest::Approx(1.5));
  CHECK(r.l1.cy == doctest::Approx(-std::sqrt(3.0) / 2));
  CHECK(r.l1.ct == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(r.l1.c0 == doctest::Approx(1.5));
  CHECK(*r.angle_printed == doctest::Approx(pi / 3));
  CHECK(r.angle_between == doctest::Approx(pi / 3));

  const auto q = ridge_lines(FamilyId::ds1_travelling, ds1(2, pi / 2, 0, 0));
  const double s1 = -q.l1.cx / q.l1.cy, s2 = -q.l2.cx / q.l2.cy;
  CHECK(s1 * s2 < 0);
  CHECK_THROWS_AS(ridge_lines(FamilyId::ds1_fundamental, ds1(2, 0, 0, 0)), ParameterError);
}

TEST_CASE("located zeros lie on the analytic conics") {
  FamilyParams p;
  p.phi1 = -pi / 6;
  const auto rep = ds2_critical_time(p);
  const auto z = locate_blowup(catalog_solution(FamilyId::ds2_fundamental, p), *rep.t_c, Box{}, 120);
  REQUIRE(z.size() > 10);
  for (const auto& b : z) CHECK(std::abs((*rep.locus)(b.x, b.y)) <= 1e-4);

  const auto q = ds1(2, 2 * pi, 0, 1);
  const auto r1 = ds1_critical_time(q);
  const auto z1 = locate_blowup(catalog_solution(FamilyId::ds1_fundamental, q), 0.0, Box{}, 120);
  REQUIRE(z1.size() > 10);
  for (const auto& b : z1) CHECK(std::abs((*r1.locus)(b.x, b.y)) <= 1e-4);
}

TEST_CASE("numeric critical time and intervals") {
  FamilyParams p;
  p.phi1 = -pi / 6;
  const auto sol = catalog_solution(FamilyId::ds2_fundamental, p);
  CHECK(std::abs(numeric_critical_time(sol, 0.0, 1.5, Box{}) - std::sqrt(3.0) / 3) <= 1e-4);

  const auto rogue = catalog_solution(FamilyId::ds1_two_rogue, default_params(FamilyId::ds1_two_rogue));
  const auto J = numeric_singular_interval(rogue, -1, 1, Box{}, 100);
  REQUIRE(J);
  CHECK(std::abs((*J)[1] - ds1_two_rogue_interval(2)[1]) <= 1e-3);
  CHECK(std::abs((*J)[0] + (*J)[1]) <= 1e-3);
}

TEST_CASE("two-rational interval from the zero search matches the quadratic") {
  const auto sol = catalog_solution(FamilyId::ds2_two_rational, default_params(FamilyId::ds2_two_rational));
  const auto I = ds2_two_rational_interval();
  const auto J = numeric_singular_interval(sol, 0.2, 0.8, wide, 120);
  REQUIRE(J);
  CHECK(std::abs((*J)[0] - I[0]) <= 1e-5);
  CHECK(std::abs((*J)[1] - I[1]) <= 1e-5);
}
