#include "ptds/verify.hpp"

#include <cmath>

namespace ptds {

namespace {

bool bad(const Sample& s) {
  return s.flag != Flag::regular || !std::isfinite(s.u.real()) || !std::isfinite(s.u.imag()) ||
         !std::isfinite(s.w.real()) || !std::isfinite(s.w.imag()) || std::abs(s.u) > 1e6;
}

}  // namespace

ResidualReport pde_residual(const Solution& sol, const GlobalParams& gp, const Box& box, double t, double h) {
  if (!(h > 0)) throw ParameterError("pde_residual: h must be positive");
  if (std::abs(box.xmin + box.xmax) > 1e-12 * std::max(1.0, std::abs(box.xmax)) || box.xmax <= 0)
    throw ParameterError("pde_residual: x-range must be symmetric about 0");
  if (box.ymax <= box.ymin) throw ParameterError("pde_residual: empty y-range");
  gp.validate();

  const long n = std::lround(box.xmax / h);
  const long m = std::lround((box.ymax - box.ymin) / h);
  if (n < 2 || m < 2) throw ParameterError("pde_residual: grid too coarse for the stencils");
  const std::size_t nx = 2 * n + 1, ny = m + 1;
  std::vector<double> xs(nx), ys(ny);
  for (std::size_t i = 0; i < nx; ++i) xs[i] = (double(i) - double(n)) * h;
  for (std::size_t j = 0; j < ny; ++j) ys[j] = box.ymin + double(j) * h;

  const auto prev = sample_grid(sol, xs, ys, t - h);
  const auto cur = sample_grid(sol, xs, ys, t);
  const auto next = sample_grid(sol, xs, ys, t + h);
  for (const auto& s : cur)
    if (!s.has_w && s.flag == Flag::regular) throw ParameterError("pde_residual: the solution carries no w field");

  auto at = [nx](std::size_t i, std::size_t j) { return j * nx + i; };
  const double eps = gp.epsilon, a2 = gp.alpha_sq;
  const cplx I1{0.0, 1.0};
  // uv at (i, j): v reflects u through x = 0.
  auto uv = [&](std::size_t i, std::size_t j) {
    return cur[at(i, j)].u * eps * std::conj(cur[at(nx - 1 - i, j)].u);
  };

  const std::size_t inner = (nx - 2) * (ny - 2);
  std::vector<double> r1(inner, -1.0), r2(inner, -1.0);
  parallel_for(ny - 2, [&](std::size_t jj) {
    const std::size_t j = jj + 1;
    for (std::size_t i = 1; i + 1 < nx; ++i) {
      const std::size_t k = jj * (nx - 2) + (i - 1);
      const std::size_t ri = nx - 1 - i;
      if (bad(prev[at(i, j)]) || bad(next[at(i, j)])) continue;
      bool skip = false;
      for (long d = -1; d <= 1 && !skip; ++d) {
        skip |= bad(cur[at(i + d, j)]) || bad(cur[at(ri + d, j)]);
        skip |= bad(cur[at(i, j + d)]);
      }
      if (skip) continue;
      const cplx u = cur[at(i, j)].u, w = cur[at(i, j)].w;
      const cplx ut = (next[at(i, j)].u - prev[at(i, j)].u) / (2 * h);
      const cplx uxx = (cur[at(i + 1, j)].u - 2.0 * u + cur[at(i - 1, j)].u) / (h * h);
      const cplx uyy = (cur[at(i, j + 1)].u - 2.0 * u + cur[at(i, j - 1)].u) / (h * h);
      const cplx p = uv(i, j);
      r1[k] = std::abs(I1 * ut + 0.5 * a2 * uxx + 0.5 * uyy + (p - w) * u);
      const cplx wxx = (cur[at(i + 1, j)].w - 2.0 * w + cur[at(i - 1, j)].w) / (h * h);
      const cplx wyy = (cur[at(i, j + 1)].w - 2.0 * w + cur[at(i, j - 1)].w) / (h * h);
      const cplx pxx = (uv(i + 1, j) - 2.0 * p + uv(i - 1, j)) / (h * h);
      r2[k] = std::abs(wxx - a2 * wyy - 2.0 * pxx);
    }
  });

  ResidualReport rep;
  rep.h = h;
  rep.total = inner;
  double s1 = 0, s2 = 0;
  for (std::size_t k = 0; k < inner; ++k) {
    if (r1[k] < 0) {
      ++rep.masked;
      continue;
    }
    rep.max_eq1 = std::max(rep.max_eq1, r1[k]);
    rep.max_eq2 = std::max(rep.max_eq2, r2[k]);
    s1 += r1[k];
    s2 += r2[k];
  }
  if (rep.masked == rep.total) throw SingularPointError("pde_residual: every stencil is masked");
  const double cnt = double(rep.total - rep.masked);
  rep.mean_eq1 = s1 / cnt;
  rep.mean_eq2 = s2 / cnt;
  return rep;
}

ResidualReport pde_residual(const Solution& sol, const Box& box, double t, double h) {
  return pde_residual(sol, sol.params(), box, t, h);
}

ConvergenceReport convergence_order(const Solution& sol, const GlobalParams& gp, const Box& box, double t,
                                    double h) {
  ConvergenceReport c;
  c.coarse = pde_residual(sol, gp, box, t, h);
  c.fine = pde_residual(sol, gp, box, t, h / 2);
  c.floor_eq1 = c.fine.max_eq1 < residual_floor;
  c.floor_eq2 = c.fine.max_eq2 < residual_floor;
  c.order_eq1 = std::log2(c.coarse.max_eq1 / c.fine.max_eq1);
  c.order_eq2 = std::log2(c.coarse.max_eq2 / c.fine.max_eq2);
  c.floor = c.floor_eq1 && c.floor_eq2;
  if (c.floor_eq1)
    c.order = c.order_eq2;
  else if (c.floor_eq2)
    c.order = c.order_eq1;
  else
    c.order = std::abs(c.order_eq1 - 2) >= std::abs(c.order_eq2 - 2) ? c.order_eq1 : c.order_eq2;
  return c;
}

ConvergenceReport convergence_order(const Solution& sol, const Box& box, double t, double h) {
  return convergence_order(sol, sol.params(), box, t, h);
}

}  // namespace ptds
