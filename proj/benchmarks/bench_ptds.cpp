// Throughput of the evaluation kernels: symbolic eigenfunctions, the two
// Darboux pipelines, grid sampling and the finite-difference verifier.

#include <benchmark/benchmark.h>

#include "ptds/catalog.hpp"
#include "ptds/ds1.hpp"
#include "ptds/ds2.hpp"
#include "ptds/spectra.hpp"
#include "ptds/verify.hpp"

using namespace ptds;

namespace {

SpectralParams sp(double r, double phi, cplx F) {
  SpectralParams s;
  s.r = r;
  s.phi = phi;
  s.F = F;
  return s;
}

GlobalParams ds2() {
  GlobalParams gp;
  gp.alpha_sq = -1;
  return gp;
}

void BM_ExpPolyEval(benchmark::State& state) {
  const auto e = make_superposed(sp(1.7, 0.4, {0.3, -0.2}), GlobalParams{});
  const ExpPoly f = e.xi * e.eta + e.xi.derivative(Var::x, 2);
  Point p{0.1, 0.2, 0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(p));
    p.x += 1e-9;
  }
}
BENCHMARK(BM_ExpPolyEval);

void BM_Ds1Point(benchmark::State& state) {
  const int n = int(state.range(0));
  std::vector<SpectralParams> sps;
  for (int i = 0; i < n; ++i) sps.push_back(sp(1.5 + 0.3 * i, 0.0, {0.2 * i, 0.5}));
  const auto sol = ds1_highorder(sps, std::vector<int>(n, 0), GlobalParams{});
  Point p{0.3, -0.4, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sol(p));
    p.x += 1e-9;
  }
}
BENCHMARK(BM_Ds1Point)->Arg(1)->Arg(2)->Arg(3);

void BM_Ds2Point(benchmark::State& state) {
  const int r = int(state.range(0));
  const auto sol = ds2_highorder({sp(1.0, 2 * pi, 0.0)}, {r}, CMat::Zero(r, r), ds2());
  Point p{0.3, -0.4, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sol(p));
    p.x += 1e-9;
  }
}
BENCHMARK(BM_Ds2Point)->Arg(1)->Arg(2)->Arg(3);

void BM_SampleGrid(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto sol = catalog_solution(FamilyId::ds2_two_rational, default_params(FamilyId::ds2_two_rational));
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) xs[i] = ys[i] = -3.0 + 6.0 * i / (n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_grid(sol, xs, ys, -0.5));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SampleGrid)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Residual(benchmark::State& state) {
  const auto p = default_params(FamilyId::ds1_fundamental);
  const auto sol = catalog_solution(FamilyId::ds1_fundamental, p);
  for (auto _ : state) benchmark::DoNotOptimize(pde_residual(sol, Box{}, -0.5, 0.02));
}
BENCHMARK(BM_Residual)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
