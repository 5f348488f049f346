#include "doctest.h"
#include "support.hpp"

using namespace ptds;
using ptds::testing::random_points;

namespace {

ExpPoly random_poly(std::mt19937& rng, int terms) {
  std::uniform_real_distribution<double> c(-1, 1);
  std::uniform_int_distribution<int> k(0, 2);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i)
    out.push_back({{c(rng), c(rng)},
                   {k(rng), k(rng), k(rng)},
                   {cplx(c(rng), c(rng)), cplx(c(rng), c(rng)), cplx(c(rng), c(rng))}});
  return ExpPoly(std::move(out));
}

}  // namespace

TEST_CASE("evaluation of simple terms") {
  CHECK(ExpPoly::exponential({-1.0, 0.0, 0.0})({0, 0, 0}) == cplx(1.0));
  const auto f = ExpPoly::monomial(1.0, {1, 0, 0}, {2.0, 0.0, 0.0});
  CHECK(std::abs(f({1, 0, 0}) - std::exp(2.0)) < 1e-14);
  const auto g = ExpPoly::variable(Var::x) * I + ExpPoly::variable(Var::y) * ExpPoly::variable(Var::y);
  CHECK(std::abs(g({2, 3, 0}) - cplx(9, 2)) < 1e-14);
}

TEST_CASE("derivatives") {
  const cplx p{0.3, -1.2};
  const auto e = ExpPoly::exponential({p, 0.0, 0.0});
  CHECK(e.derivative(Var::x).same_as(e * p));
  CHECK(ExpPoly::monomial(1.0, {2, 0, 0}).derivative(Var::x, 2).same_as(ExpPoly::constant(2.0)));
  const auto xe = ExpPoly::monomial(1.0, {1, 0, 0}, {1.0, 0.0, 0.0});
  CHECK(xe.derivative(Var::x).same_as(xe + ExpPoly::exponential({1.0, 0.0, 0.0})));
}

TEST_CASE("x-antiderivative") {
  CHECK(ExpPoly::exponential({2.0, 0.0, 0.0}).antideriv_x().same_as(ExpPoly::exponential({2.0, 0.0, 0.0}, 0.5)));
  CHECK(ExpPoly::variable(Var::x).antideriv_x().same_as(ExpPoly::monomial(0.5, {2, 0, 0})));
  const auto xe = ExpPoly::monomial(1.0, {1, 0, 0}, {1.0, 0.0, 0.0});
  CHECK(xe.antideriv_x().same_as(xe - ExpPoly::exponential({1.0, 0.0, 0.0})));
  CHECK(ExpPoly::variable(Var::x).antideriv_x(cplx(0, 3))({0, 0, 0}) == cplx(0, 3));
}

TEST_CASE("y-antiderivative inverts the y-derivative") {
  std::mt19937 rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_poly(rng, 5);
    CHECK(f.antideriv(Var::y).derivative(Var::y).same_as(f, 1e-10));
  }
}

TEST_CASE("reflect-conjugation examples") {
  const auto ix = ExpPoly::variable(Var::x) * I;
  CHECK(ix.reflect_conj().same_as(ix));
  CHECK(ExpPoly::exponential({cplx(1, 1), 0.0, 0.0}).reflect_conj().same_as(ExpPoly::exponential({cplx(-1, 1), 0.0, 0.0})));
  const auto g = ExpPoly::variable(Var::y) + cplx(0, 2);
  CHECK(g.reflect_conj().same_as(ExpPoly::variable(Var::y) + cplx(0, -2)));
}

TEST_CASE("random invariants") {
  std::mt19937 rng(7);
  for (int k = 0; k < 30; ++k) {
    const auto f = random_poly(rng, 6);
    for (const auto& p : random_points(rng, 5, 1.0)) {
      const double h = 1e-5;
      const cplx fd = (f({p.x + h, p.y, p.t}) - f({p.x - h, p.y, p.t})) / (2 * h);
      const cplx ex = f.derivative(Var::x)(p);
      CHECK(std::abs(fd - ex) <= 1e-6 * std::max(1.0, std::abs(ex)));
      CHECK(std::abs(f.reflect_conj()(p) - std::conj(f({-p.x, p.y, p.t}))) < 1e-12 * std::max(1.0, std::abs(f({-p.x, p.y, p.t}))));
    }
    CHECK(f.antideriv_x(cplx(0.5, 0.1)).derivative(Var::x).same_as(f, 1e-10));
    CHECK(f.reflect_conj().reflect_conj().same_as(f));
  }
}

TEST_CASE("canonicalization merges like terms and drops zeros") {
  const auto e = ExpPoly::exponential({1.0, 0.0, 0.0});
  CHECK((e + e).size() == 1);
  CHECK((e - e).is_zero());
}

TEST_CASE("jet arithmetic truncates to the lower order") {
  const auto one = ExpPoly::constant(1.0);
  const Jet a({one, one, one, one});
  const Jet b({one, one});
  CHECK((a * b).order() == 1);
  CHECK((a + b).order() == 1);
  CHECK((a * b)[1].same_as(ExpPoly::constant(2.0)));
}
