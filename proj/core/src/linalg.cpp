#include "ptds/linalg.hpp"

#include <cmath>

namespace ptds {

ScaledLU::ScaledLU(const CMat& a) : scale_(a.rows()) {
  CMat s = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double m = a.row(i).cwiseAbs().maxCoeff();
    if (!(m > 0.0) || !std::isfinite(m)) m = 1.0;
    scale_(i) = m;
    s.row(i) /= m;
  }
  lu_.compute(s);
  det_ = lu_.determinant();
  rcond_ = lu_.rcond();
  if (!std::isfinite(std::abs(det_)) || std::abs(det_) < det_tol)
    flag_ = Flag::singular;
  else if (!(rcond_ >= rcond_tol))
    flag_ = Flag::near_singular;
  else
    flag_ = Flag::regular;
}

cplx ScaledLU::det() const { return det_ * scale_.prod(); }

CMat ScaledLU::solve(const CMat& b) const {
  CMat sb = b;
  for (Eigen::Index i = 0; i < b.rows(); ++i) sb.row(i) /= scale_(i);
  return lu_.solve(sb);
}

CMat ScaledLU::inverse() const {
  return solve(CMat::Identity(scale_.size(), scale_.size()));
}

}  // namespace ptds
