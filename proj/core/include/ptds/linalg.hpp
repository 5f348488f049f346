#pragma once

#include <Eigen/Dense>

#include "ptds/common.hpp"

namespace ptds {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// LU of the row-max-scaled matrix.  The scaled determinant and the
// reciprocal condition estimate decide the singular tagging; the
// factorization is reused for solves against the unscaled matrix.
class ScaledLU {
 public:
  static constexpr double det_tol = 1e-12;
  static constexpr double rcond_tol = 1e-12;

  explicit ScaledLU(const CMat& a);

  Flag flag() const { return flag_; }
  cplx scaled_det() const { return det_; }
  double rcond() const { return rcond_; }
  cplx det() const;              // det of the original matrix
  CMat solve(const CMat& b) const;  // a^{-1} b
  CMat inverse() const;

 private:
  Eigen::VectorXd scale_;
  Eigen::PartialPivLU<CMat> lu_;
  cplx det_;
  double rcond_;
  Flag flag_;
};

}  // namespace ptds
