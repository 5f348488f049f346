#pragma once
// Binary Darboux transformation for the DS-II reduction (alpha = i):
//   Omega_ij = d_x^{-1}(phi_i^dagger theta_j) + c_ij,
//   u_{n+1} = u - (2/alpha) det M^{(1,2)} / det Omega,
//   w_{n+1} = w - 2/alpha^2 d_x^2 log det Omega,
// where M^{(1,2)} borders Omega with the column conj(phi_i,2) and the row theta_j,1.

#include <vector>

#include "ptds/linalg.hpp"
#include "ptds/solution.hpp"
#include "ptds/spectra.hpp"

namespace ptds {

using OmegaMatrix = std::vector<std::vector<ExpPoly>>;

// constants may be empty (all zero) or n x n.
OmegaMatrix omega(const std::vector<Column>& thetas, const std::vector<Column>& phis,
                  const CMat& constants = {});

// Rejects any pair with r_k r_j (r_k + r_j e^{i(phi_j + phi_k)})^3 = 0, the
// diagonal pairs included.
void ds2_parameter_guard(const std::vector<SpectralParams>& sps);

Solution ds2_solution(const std::vector<Column>& thetas, const std::vector<Column>& phis,
                      const CMat& constants, const GlobalParams& gp);

// Superposed eigenfunctions, adjoints from the symmetry, guard applied.
Solution ds2_solution(const std::vector<SpectralParams>& sps, const GlobalParams& gp,
                      const CMat& constants = {});

// Eigenfunction i contributes r_i >= 1 columns: jet coefficients 0..r_i-1.
Solution ds2_highorder(const std::vector<SpectralParams>& sps, const std::vector<int>& r,
                       const CMat& constants, const GlobalParams& gp);

struct RemarkCheck {
  cplx trace_quasidet;  // tr |Omega P^dagger; Theta [0]|
  cplx minus_dlogdet;   // -d_x log det Omega from the Omega entry derivatives
  double rel;
};
RemarkCheck remark_identity(const std::vector<Column>& thetas, const std::vector<Column>& phis,
                            const CMat& constants, const Point& p);

}  // namespace ptds
