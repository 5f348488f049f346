#include "doctest.h"
#include "ptds/catalog.hpp"
#include "ptds/ds1.hpp"
#include "ptds/verify.hpp"

using namespace ptds;

TEST_CASE("seed sits at the rounding floor") {
  for (int eps : {1, -1})
    for (int a2 : {1, -1}) {
      GlobalParams gp;
      gp.epsilon = eps;
      gp.alpha_sq = a2;
      const auto r = pde_residual(Solution::seed(gp), Box{}, 0.3, 0.05);
      CHECK(r.max_eq1 <= 1e-12);
      CHECK(r.max_eq2 <= 1e-12);
      CHECK(r.masked == 0);
      CHECK(convergence_order(Solution::seed(gp), Box{}, 0.3, 0.05).floor);
    }
}

TEST_CASE("second-order convergence on an exact solution") {
  const auto p = default_params(FamilyId::ds1_fundamental);
  const auto c = convergence_order(catalog_solution(FamilyId::ds1_fundamental, p), Box{}, -0.5, 0.02);
  CHECK(c.passed());
  CHECK(c.order_eq1 == doctest::Approx(2).epsilon(0.05));
  CHECK(c.fine.max_eq1 < c.coarse.max_eq1 / 3);
}

TEST_CASE("a corrupted field is caught") {
  const auto p = default_params(FamilyId::ds1_fundamental);
  const auto bad = catalog_solution(FamilyId::ds1_fundamental, p).corrupted(0.01);
  const auto c = convergence_order(bad, Box{}, -0.5, 0.02);
  CHECK_FALSE(c.passed());
  CHECK(std::abs(c.order) < 0.5);
  CHECK(c.fine.max_eq1 > 1e-3);
}

TEST_CASE("input errors") {
  const auto s = Solution::seed(GlobalParams{});
  CHECK_THROWS_AS(pde_residual(s, Box{-1, 2, -1, 1}, 0, 0.05), ParameterError);
  CHECK_THROWS_AS(pde_residual(s, Box{}, 0, 0), ParameterError);
  const Solution no_w(GlobalParams{}, [](const Point&) { return Sample{1.0, 0.0, false, Flag::regular}; },
                      [](const Point&) { return cplx(1.0); });
  CHECK_THROWS_AS(pde_residual(no_w, Box{}, 0, 0.05), ParameterError);
  const Solution dead(GlobalParams{}, [](const Point&) { return Sample{1.0, 1.0, true, Flag::singular}; },
                      [](const Point&) { return cplx(0.0); });
  CHECK_THROWS_AS(pde_residual(dead, Box{}, 0, 0.05), SingularPointError);
}

TEST_CASE("flagged samples are masked, not counted") {
  // DS-I fundamental at its critical time: the hyperbola crosses the box.
  const auto p = default_params(FamilyId::ds1_fundamental);
  const auto r = pde_residual(catalog_solution(FamilyId::ds1_fundamental, p), Box{}, 0.0, 0.05);
  CHECK(std::isfinite(r.max_eq1));
  CHECK(r.total > 0);
}
