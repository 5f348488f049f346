#pragma once
// Eigenfunctions of the Lax pair
//   L = d_y - J d_x - P,   M = d_t - i a^{-1} J d_x^2 - i a^{-1} P d_x - a^{-1} V
// on the seed u = rho, v = eps rho, w = eps rho^2 (V diagonal part zero).

#include <array>
#include <optional>
#include <vector>

#include "ptds/common.hpp"
#include "ptds/exppoly.hpp"

namespace ptds {

struct SpectralParams {
  double r = 1.0;    // |lambda|
  double phi = 0.0;  // arg lambda
  std::optional<cplx> rho_k;  // defaults to exp(-i phi / 2), which then depends on phi
  cplx F = 0.0;      // superposition constant
};

// lambda and the exponent omega = a_k x + b_k y + g_k t.
struct SpectralData {
  cplx lambda, a, b, g;
};

struct EigenPair {
  ExpPoly xi, eta;
};

using Column = std::array<ExpPoly, 2>;

// theta = [[xi, -eps conj(eta)(-x)], [eta, conj(xi)(-x)]]
struct EigenMatrix {
  std::array<std::array<ExpPoly, 2>, 2> m;
  Column column(int j) const { return {m[0][j], m[1][j]}; }
};

SpectralData spectral_data(const SpectralParams& sp, const GlobalParams& gp);

EigenPair make_eigenfunction(const SpectralParams& sp, const GlobalParams& gp);

// (P xi, Q eta): the phi-derivative of the eigenfunction plus F times it.
EigenPair make_superposed(const SpectralParams& sp, const GlobalParams& gp);

// Taylor coefficients in delta of the plain eigenfunction at phi + delta.
std::array<Jet, 2> eigen_jet(const SpectralParams& sp, const GlobalParams& gp, int order);

// Coefficient j is F c_j + (j+1) c_{j+1} of the plain jet c.
std::array<Jet, 2> superposed_jet(const SpectralParams& sp, const GlobalParams& gp, int order);

EigenMatrix make_eigen_matrix(const EigenPair& e, const GlobalParams& gp);

// phi = i kappa theta(-x, y, t), kappa = diag(1, eps).  The adjoint potential
// then enters Omega through phi^dagger, which supplies the conjugation.
Column make_adjoint(const Column& theta, const GlobalParams& gp);

// max |conj(theta)(x) - sigma theta(-x) sigma^{-1}| over the points.
double symmetry_defect(const EigenMatrix& th, const GlobalParams& gp,
                       const std::vector<Point>& pts);

// Max over points of each row of (L Phi, M Phi) relative to its largest term
// (floored at 1); all derivatives exact.
double lax_residual(const EigenPair& e, const GlobalParams& gp, const std::vector<Point>& pts);

}  // namespace ptds
