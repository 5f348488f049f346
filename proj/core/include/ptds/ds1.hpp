#pragma once
// N-fold Darboux transformation for the DS-I reduction (alpha^2 = 1):
//   u_N = u + 2/alpha det Sigma^{1,2} / det Sigma,
//   w_N = w - 2/alpha^2 [ln det Sigma]_xx,
// Sigma holding the block rows d^{N-1} Psi_k, ..., Psi_k.

#include <vector>

#include "ptds/solution.hpp"
#include "ptds/spectra.hpp"

namespace ptds {

struct OnefoldResult {
  cplx u, w;
};

// Elementary step u + 2/alpha S_12, w - 2 alpha^2 [ln det theta]_xx with
// S = theta_x theta^{-1}; throws SingularPointError when |det theta| < 1e-12.
OnefoldResult onefold_potential(const EigenMatrix& theta, const GlobalParams& gp, const Point& p);

Solution ds1_solution(const std::vector<EigenMatrix>& eigens, const GlobalParams& gp);

// Generalized transformation: eigenfunction i contributes its superposed jet
// coefficients 0..m_i as separate block columns (m_i = 0 is the plain N-fold case).
Solution ds1_highorder(const std::vector<SpectralParams>& sps, const std::vector<int>& m,
                       const GlobalParams& gp);

// Everything the invariants need at one point.
struct Ds1Inspection {
  cplx s12, s21;            // entries of s_1 via Cramer solves
  cplx det_sigma, det_sigma12, det_sigma21;  // explicit determinants
  cplx w_logdet, w_trace;   // the two forms of the w update
  Flag flag;
};
Ds1Inspection ds1_inspect(const std::vector<EigenMatrix>& eigens, const GlobalParams& gp,
                          const Point& p);

}  // namespace ptds
