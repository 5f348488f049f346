#pragma once
// Finite-difference check of the nonlocal system
//   i u_t + (a^2/2) u_xx + (1/2) u_yy + (u v - w) u = 0,
//   w_xx - a^2 w_yy - 2 (u v)_xx = 0,        v(x,y,t) = eps conj(u(-x,y,t)).
// Uses sampled values only: u, w at t-h, t, t+h, three-point stencils.

#include <cstddef>

#include "ptds/solution.hpp"

namespace ptds {

struct Box {
  double xmin = -3, xmax = 3, ymin = -3, ymax = 3;
};

struct ResidualReport {
  double max_eq1 = 0, mean_eq1 = 0;
  double max_eq2 = 0, mean_eq2 = 0;
  std::size_t masked = 0, total = 0;
  double h = 0;
  double masked_fraction() const { return total ? double(masked) / double(total) : 0.0; }
};

// A stencil is dropped when any sample it touches (including the reflected
// samples that build v) is flagged, non-finite, or has |u| > 1e6.
// Throws ParameterError if the box is not symmetric in x, h <= 0, or the
// solution carries no w; SingularPointError if every stencil is masked.
ResidualReport pde_residual(const Solution& sol, const GlobalParams& gp, const Box& box, double t, double h);
ResidualReport pde_residual(const Solution& sol, const Box& box, double t, double h);

struct ConvergenceReport {
  ResidualReport coarse, fine;  // h and h/2
  double order_eq1 = 0, order_eq2 = 0;
  bool floor_eq1 = false, floor_eq2 = false;  // fine residual below 1e-10
  double order = 0;    // the per-equation order furthest from 2 (ignoring floors)
  bool floor = false;  // both equations at the rounding floor
  bool passed(double lo = 1.7, double hi = 2.3) const { return floor || (order >= lo && order <= hi); }
};

inline constexpr double residual_floor = 1e-10;

ConvergenceReport convergence_order(const Solution& sol, const GlobalParams& gp, const Box& box, double t,
                                    double h);
ConvergenceReport convergence_order(const Solution& sol, const Box& box, double t, double h);

}  // namespace ptds
