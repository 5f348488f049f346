#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

#include "ptds/exppoly.hpp"

namespace ptds {

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Bad parameters: r = 0, forbidden spectral pairs, excluded branches.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation at a point where the transformation matrix is not invertible.
struct SingularPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Flag : int { regular = 0, near_singular = 1, singular = 2 };

// epsilon: sign of the nonlinearity; alpha_sq: +1 for DS-I, -1 for DS-II;
// rho: amplitude of the constant seed u = rho.
struct GlobalParams {
  int epsilon = 1;
  int alpha_sq = 1;
  double rho = 1.0;

  // DS-II uses the branch alpha = +i throughout.
  cplx alpha() const { return alpha_sq == 1 ? cplx(1.0) : I; }
  void validate() const;
};

}  // namespace ptds
