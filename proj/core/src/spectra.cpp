#include "ptds/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace ptds {

void GlobalParams::validate() const {
  if (epsilon != 1 && epsilon != -1) throw ParameterError("epsilon must be +1 or -1");
  if (alpha_sq != 1 && alpha_sq != -1) throw ParameterError("alpha_sq must be +1 or -1");
  if (rho == 0.0) throw ParameterError("background amplitude rho must be nonzero");
}

namespace {

void check(const SpectralParams& sp, const GlobalParams& gp) {
  gp.validate();
  if (sp.r == 0.0) throw ParameterError("spectral modulus r must be nonzero");
}

cplx rho_k(const SpectralParams& sp) { return sp.rho_k.value_or(std::exp(-I * sp.phi / 2.0)); }

// d rho_k / d phi divided by rho_k.
cplx rho_k_log_derivative(const SpectralParams& sp) { return sp.rho_k ? cplx(0.0) : -I / 2.0; }

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

SpectralData spectral_data(const SpectralParams& sp, const GlobalParams& gp) {
  check(sp, gp);
  const cplx al = gp.alpha();
  const cplx lam = std::polar(sp.r, sp.phi);
  const double e = gp.epsilon, r2 = gp.rho * gp.rho;
  const cplx a = -al / 2.0 * (lam + e * r2 / lam);
  const cplx b = (lam - e * r2 / lam) / 2.0;
  return {lam, a, b, I / al * a * b};
}

EigenPair make_eigenfunction(const SpectralParams& sp, const GlobalParams& gp) {
  const auto d = spectral_data(sp, gp);
  const ExpPoly E = ExpPoly::exponential({d.a, d.b, d.g});
  const cplx rk = rho_k(sp);
  return {E * rk, E * (d.lambda * rk / gp.rho)};
}

EigenPair make_superposed(const SpectralParams& sp, const GlobalParams& gp) {
  const auto d = spectral_data(sp, gp);
  const cplx al = gp.alpha();
  const double r4 = std::pow(gp.rho, 4);
  const ExpPoly lin = ExpPoly::variable(Var::x) * (-I * al * d.b) +
                      ExpPoly::variable(Var::y) * (-I / al * d.a) +
                      ExpPoly::variable(Var::t) * (0.5 * (d.lambda * d.lambda + r4 / (d.lambda * d.lambda)));
  const cplx lr = rho_k_log_derivative(sp);
  const ExpPoly P = lin + (sp.F + lr);
  // d/dphi of (lambda rho_k / rho) e^omega, divided by that prefactor.
  const ExpPoly Q = lin + (sp.F + I + lr);
  const auto plain = make_eigenfunction(sp, gp);
  return {P * plain.xi, Q * plain.eta};
}

std::array<Jet, 2> eigen_jet(const SpectralParams& sp, const GlobalParams& gp, int order) {
  const auto d = spectral_data(sp, gp);
  const cplx al = gp.alpha();
  const double e = gp.epsilon, r2 = gp.rho * gp.rho;
  const int n = order + 1;
  // lambda(delta) = lambda e^{i delta}
  Series L(n), Li(n), A(n), B(n), R(n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double fk = factorial(k);
    L[k] = d.lambda * std::pow(I, k) / fk;
    Li[k] = std::pow(-I, k) / (d.lambda * fk);
    A[k] = -al / 2.0 * (L[k] + e * r2 * Li[k]);
    B[k] = (L[k] - e * r2 * Li[k]) / 2.0;
  }
  Series G = series_mul(A, B);
  for (auto& g : G) g *= I / al;
  if (sp.rho_k) {
    R[0] = *sp.rho_k;
  } else {
    for (int k = 0; k < n; ++k) R[k] = std::exp(-I * sp.phi / 2.0) * std::pow(-I / 2.0, k) / factorial(k);
  }

  std::vector<ExpPoly> w(n);
  for (int k = 1; k < n; ++k)
    w[k] = ExpPoly::variable(Var::x) * A[k] + ExpPoly::variable(Var::y) * B[k] +
           ExpPoly::variable(Var::t) * G[k];
  Jet ex = jet_exp_nilpotent(Jet(std::move(w)));
  const ExpPoly E0 = ExpPoly::exponential({d.a, d.b, d.g});
  std::vector<ExpPoly> c(n);
  for (int k = 0; k < n; ++k) c[k] = ex[k] * E0;
  ex = Jet(std::move(c));

  Series LR = series_mul(L, R);
  for (auto& v : LR) v /= gp.rho;
  return {series_times(R, ex), series_times(LR, ex)};
}

std::array<Jet, 2> superposed_jet(const SpectralParams& sp, const GlobalParams& gp, int order) {
  const auto plain = eigen_jet(sp, gp, order + 1);
  std::array<Jet, 2> out;
  for (int s = 0; s < 2; ++s) {
    std::vector<ExpPoly> c(order + 1);
    for (int j = 0; j <= order; ++j)
      c[j] = plain[s][j] * sp.F + plain[s][j + 1] * cplx(static_cast<double>(j + 1));
    out[s] = Jet(std::move(c));
  }
  return out;
}

EigenMatrix make_eigen_matrix(const EigenPair& e, const GlobalParams& gp) {
  EigenMatrix th;
  th.m[0][0] = e.xi;
  th.m[0][1] = e.eta.reflect_conj() * cplx(-gp.epsilon);
  th.m[1][0] = e.eta;
  th.m[1][1] = e.xi.reflect_conj();
  return th;
}

Column make_adjoint(const Column& theta, const GlobalParams& gp) {
  return {theta[0].reflect() * I, theta[1].reflect() * (I * static_cast<double>(gp.epsilon))};
}

double symmetry_defect(const EigenMatrix& th, const GlobalParams& gp, const std::vector<Point>& pts) {
  const double e = gp.epsilon;
  double worst = 0.0;
  for (const auto& p : pts) {
    const Point q{-p.x, p.y, p.t};
    const cplx a = th.m[0][0](q), b = th.m[0][1](q), c = th.m[1][0](q), d = th.m[1][1](q);
    // sigma [[a,b],[c,d]] sigma^{-1} = [[d, -eps c], [-eps b, a]]
    const cplx rhs[4] = {d, -e * c, -e * b, a};
    const cplx lhs[4] = {std::conj(th.m[0][0](p)), std::conj(th.m[0][1](p)),
                         std::conj(th.m[1][0](p)), std::conj(th.m[1][1](p))};
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
  }
  return worst;
}

double lax_residual(const EigenPair& e, const GlobalParams& gp, const std::vector<Point>& pts) {
  gp.validate();
  const cplx ai = 1.0 / gp.alpha();
  const double rho = gp.rho, eps = gp.epsilon;
  const ExpPoly& xi = e.xi;
  const ExpPoly& eta = e.eta;
  const ExpPoly xi_x = xi.derivative(Var::x), eta_x = eta.derivative(Var::x);
  const ExpPoly xi_y = xi.derivative(Var::y), eta_y = eta.derivative(Var::y);
  const ExpPoly xi_t = xi.derivative(Var::t), eta_t = eta.derivative(Var::t);
  const ExpPoly xi_xx = xi.derivative(Var::x, 2), eta_xx = eta.derivative(Var::x, 2);
  double worst = 0.0;
  // Each row of L and M is a sum of three terms; its value is measured
  // against the largest of them (floored at 1).
  auto row = [&](cplx a, cplx b, cplx c) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
    worst = std::max(worst, std::abs(a + b + c) / scale);
  };
  for (const auto& p : pts) {
    const cplx x = xi(p), e = eta(p), xx = xi_x(p), ex = eta_x(p);
    row(xi_y(p), -xx * ai, -e * rho);
    row(eta_y(p), ex * ai, x * (eps * rho));
    row(xi_t(p), -xi_xx(p) * (I * ai * ai), -ex * (I * ai * rho));
    row(eta_t(p), eta_xx(p) * (I * ai * ai), xx * (I * ai * eps * rho));
  }
  return worst;
}

}  // namespace ptds
