#include "doctest.h"
#include "ptds/catalog.hpp"
#include "ptds/verify.hpp"
#include "support.hpp"

using namespace ptds;
using ptds::testing::rel;

namespace {

struct Diff {
  double u = 0, w = 0;
  int used = 0;
};

// Catalog against the Darboux recipe at n random points, skipping tagged samples.
Diff against_recipe(FamilyId id, const FamilyParams& p, std::mt19937& rng, int n = 50) {
  const auto rec = dt_recipe(id, p).solution;
  std::uniform_real_distribution<double> d(-2, 2);
  Diff out;
  while (out.used < n) {
    const Point pt{d(rng), d(rng), d(rng)};
    const auto c = catalog_eval(id, p, pt);
    const auto s = rec(pt);
    if (c.flag != Flag::regular || s.flag != Flag::regular) continue;
    out.u = std::max(out.u, rel(c.u, s.u));
    if (c.w) out.w = std::max(out.w, rel(*c.w, s.w));
    ++out.used;
  }
  return out;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (auto id : all_families()) CHECK(family_from_name(family_name(id)) == id);
  CHECK_THROWS_AS(family_from_name("ds3_nothing"), ParameterError);
}

TEST_CASE("trivial DS-I case r1 = 1, eps = -1") {
  FamilyParams p;
  p.epsilon = -1;
  p.phi1 = 0.7;
  std::mt19937 rng(61);
  for (const auto& pt : ptds::testing::random_points(rng, 20, 3.0)) {
    const auto v = catalog_eval(FamilyId::ds1_fundamental, p, pt);
    CHECK(v.u == cplx(1.0));
    CHECK(*v.w == cplx(-1.0));
  }
  CHECK(catalog_asymptotics(FamilyId::ds1_fundamental, p, -1e3).max_deviation == 0.0);
}

TEST_CASE("peak values of the line waves") {
  FamilyParams p;
  p.sign = 1;
  for (double x : {-2.0, 0.0, 3.5}) {
    CHECK(std::abs(catalog_eval(FamilyId::ds1_peregrine, p, {x, 0, 0}).u - cplx(-3)) < 1e-14);
    CHECK(std::abs(catalog_eval(FamilyId::ds2_line, p, {x, 0, 0}).u - cplx(-3)) < 1e-14);
  }
}

TEST_CASE("branch validation") {
  FamilyParams p;
  p.phi1 = pi / 2;
  CHECK_THROWS_AS(validate_params(FamilyId::ds2_fundamental, p), ParameterError);
  p = FamilyParams{};
  p.r1 = 0;
  CHECK_THROWS_AS(validate_params(FamilyId::ds1_fundamental, p), ParameterError);
  CHECK_THROWS_AS(dt_recipe(FamilyId::ds2_local_ds1_map, default_params(FamilyId::ds2_local_ds1_map)),
                  ParameterError);
}

TEST_CASE("printed forms agree with their Darboux constructions") {
  std::mt19937 rng(67);
  const struct {
    FamilyId id;
    std::string variant;
  } cases[] = {
      {FamilyId::ds1_fundamental, "printed"},  {FamilyId::ds1_peregrine, "printed"},
      {FamilyId::ds1_travelling, "printed"},   {FamilyId::ds1_travelling, "reduced"},
      {FamilyId::ds1_hybrid, "corrected"},     {FamilyId::ds1_second_order, "printed"},
      {FamilyId::ds2_fundamental, "printed"},  {FamilyId::ds2_line, "printed"},
      {FamilyId::ds2_travelling, "printed"},   {FamilyId::ds2_second_order, "corrected"},
  };
  for (const auto& c : cases) {
    auto p = default_params(c.id);
    p.variant = c.variant;
    if (c.variant == "reduced") p.r1 = 1;
    const auto d = against_recipe(c.id, p, rng);
    INFO(family_name(c.id), " ", c.variant);
    CHECK(d.u <= 1e-8);
    CHECK(d.w <= 1e-8);
  }
}

TEST_CASE("random parameters: fundamental families agree with the Darboux construction") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> r(0.4, 2.5), ph(-pi, pi), f(-2, 2);
  for (int k = 0; k < 10; ++k) {
    FamilyParams p;
    p.epsilon = k % 2 ? 1 : -1;
    p.r1 = r(rng);
    p.phi1 = (k % 4 < 2 ? 0 : 1) * pi;  // DS-I uses the k pi branches
    p.e1 = f(rng);
    p.f1 = f(rng);
    CHECK(against_recipe(FamilyId::ds1_fundamental, p, rng, 20).u <= 1e-8);

    FamilyParams q;
    q.phi1 = ph(rng);
    if (std::abs(std::cos(q.phi1)) < 0.1) continue;
    q.e1 = f(rng);
    q.f1 = f(rng);
    CHECK(against_recipe(FamilyId::ds2_fundamental, q, rng, 20).u <= 1e-8);
  }
}

TEST_CASE("verbatim forms with known slips disagree with the construction") {
  std::mt19937 rng(73);
  auto p = default_params(FamilyId::ds1_hybrid);
  CHECK(against_recipe(FamilyId::ds1_hybrid, p, rng).u > 1e-3);
  p = default_params(FamilyId::ds2_second_order);
  CHECK(against_recipe(FamilyId::ds2_second_order, p, rng).w > 1e-3);
}

TEST_CASE("Peregrine wave is x-independent") {
  std::mt19937 rng(79);
  FamilyParams p = default_params(FamilyId::ds1_peregrine);
  const double h = 1e-3;
  double worst = 0;
  for (const auto& pt : ptds::testing::random_points(rng, 50, 3.0)) {
    const auto a = catalog_eval(FamilyId::ds1_peregrine, p, {pt.x + h, pt.y, pt.t}).u;
    const auto b = catalog_eval(FamilyId::ds1_peregrine, p, {pt.x - h, pt.y, pt.t}).u;
    worst = std::max(worst, std::abs(a - b) / (2 * h));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("local DS-I map is the second-order DS-II wave at complexified x and t") {
  std::mt19937 rng(83);
  const auto p = default_params(FamilyId::ds2_local_ds1_map);
  double worst = 0;
  for (const auto& pt : ptds::testing::random_points(rng, 50, 2.0)) {
    const auto v = catalog_eval(FamilyId::ds2_local_ds1_map, p, pt);
    if (v.flag != Flag::regular) continue;
    worst = std::max(worst, rel(v.u, aux::ds2_second_order_u(cplx(0, -pt.x), pt.y, -pt.t)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rogue waves return to the background") {
  FamilyParams p = default_params(FamilyId::ds1_fundamental);
  p.phi1 = 2 * pi;
  p.r1 = 2;
  auto a = catalog_asymptotics(FamilyId::ds1_fundamental, p, -1e3);
  CHECK(a.u_background == cplx(1.0));
  CHECK(a.max_deviation <= 1e-2);

  FamilyParams q;
  q.phi1 = -pi / 6;
  a = catalog_asymptotics(FamilyId::ds2_fundamental, q, -1e3);
  CHECK(a.max_deviation <= 1e-2);
  CHECK(a.w_background == cplx(1.0));

  CHECK_THROWS_AS(catalog_asymptotics(FamilyId::ds1_travelling, default_params(FamilyId::ds1_travelling), -1e3),
                  ParameterError);
}

TEST_CASE("every nonlocal family solves the system at second order") {
  const Box box{-2, 2, -2, 2};
  const struct {
    FamilyId id;
    double t;
    std::string variant;
  } cases[] = {
      {FamilyId::ds1_fundamental, -0.5, "printed"}, {FamilyId::ds1_peregrine, 0.3, "printed"},
      {FamilyId::ds1_travelling, 0.3, "printed"},   {FamilyId::ds1_two_rogue, -0.5, "printed"},
      {FamilyId::ds1_hybrid, 0.3, "corrected"},     {FamilyId::ds1_second_order, 2.0, "printed"},
      {FamilyId::ds2_fundamental, 0.0, "printed"},  {FamilyId::ds2_line, 0.3, "printed"},
      {FamilyId::ds2_travelling, 0.3, "printed"},   {FamilyId::ds2_two_rational, -0.5, "printed"},
      {FamilyId::ds2_second_order, -2.0, "corrected"},
  };
  for (const auto& c : cases) {
    auto p = default_params(c.id);
    p.variant = c.variant;
    const auto r = convergence_order(catalog_solution(c.id, p), family_globals(c.id, p), box, c.t, 0.04);
    INFO(family_name(c.id), " t=", c.t, " orders ", r.order_eq1, " ", r.order_eq2);
    CHECK(r.passed());
    CHECK(r.fine.masked_fraction() <= 0.05);
  }
}
