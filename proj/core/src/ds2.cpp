#include "ptds/ds2.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "ptds/quasidet.hpp"

namespace ptds {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

CMat eval(const OmegaMatrix& m, const Point& p) {
  const auto n = static_cast<Eigen::Index>(m.size());
  CMat out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m[i][j](p);
  return out;
}

OmegaMatrix derivative(const OmegaMatrix& m) {
  OmegaMatrix out = m;
  for (auto& row : out)
    for (auto& f : row) f = f.derivative(Var::x);
  return out;
}

// Omega_ij carrying exp(a_i + b_j) for every entry makes det Omega carry
// exp(sum of the diagonal phases).
std::optional<Phase> additive_phase(const OmegaMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Phase>> ph(n, std::vector<Phase>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto p = m[i][j].common_phase();
      if (!p) return std::nullopt;
      ph[i][j] = *p;
    }
  Phase sum{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int k = 0; k < 3; ++k) {
        if (std::abs(ph[i][j][k] - ph[i][0][k] - ph[0][j][k] + ph[0][0][k]) > 1e-9) return std::nullopt;
        if (i == j) sum[k] += ph[i][j][k];
      }
  return sum;
}

// Omega from Omega_x = X and Omega_y = Y = alpha^{-1} (conj(phi_1) theta_1 -
// conj(phi_2) theta_2), alpha = i.  A phase group with zero x-phase has no
// unique x-antiderivative (the free part depends on y, t), so it comes from Y
// instead.  Fully polynomial groups fall back to the x-antiderivative.
ExpPoly integrate(const ExpPoly& X, const ExpPoly& Y, cplx c) {
  std::vector<Term> by_x, by_y;
  for (const auto& t : X.terms())
    if (t.phase[0] != 0.0 || t.phase[1] == 0.0) by_x.push_back(t);
  for (const auto& t : Y.terms())
    if (t.phase[0] == 0.0 && t.phase[1] != 0.0) by_y.push_back(t);
  return ExpPoly(std::move(by_x)).antideriv(Var::x, c) + ExpPoly(std::move(by_y)).antideriv(Var::y);
}

// Common phase of both components (a zero component is ignored).
std::optional<Phase> column_phase(const ExpPoly& a, const ExpPoly& b) {
  if (a.is_zero() && b.is_zero()) return std::nullopt;
  if (a.is_zero()) return b.common_phase();
  if (b.is_zero()) return a.common_phase();
  auto pa = a.common_phase(), pb = b.common_phase();
  if (!pa || !pb || *pa != *pb) return std::nullopt;
  return pa;
}

ExpPoly strip(const ExpPoly& f, const Phase& p) { return f * ExpPoly::exponential({-p[0], -p[1], -p[2]}); }

// Everything is evaluated with the exponential factors divided out when
// theta_j ~ e^{p_j} and conj(phi_i) ~ e^{q_i}: Omega_ij e^{-q_i - p_j} is a
// polynomial, and row/column factors cancel in the ratio and in d_x^2 log det.
// Without this, det Omega under- or overflows at large |t|.
struct Ds2Data {
  OmegaMatrix om, om_x, om_xx;
  std::vector<ExpPoly> col, row;  // conj(phi_i,2) and theta_j,1
  bool stripped = false;
  std::optional<Phase> phase;     // of det Omega when not stripped

  Ds2Data(const std::vector<Column>& thetas, const std::vector<Column>& phis, const CMat& constants) {
    om = omega(thetas, phis, constants);
    const std::size_t n = thetas.size();
    for (std::size_t i = 0; i < n; ++i) {
      col.push_back(phis[i][1].conj());
      row.push_back(thetas[i][0]);
    }
    std::vector<Phase> p(n), q(n);
    stripped = constants.size() == 0 || constants.isZero();
    for (std::size_t i = 0; i < n && stripped; ++i) {
      auto pi_ = column_phase(thetas[i][0], thetas[i][1]);
      auto qi = column_phase(phis[i][0].conj(), phis[i][1].conj());
      if (!pi_ || !qi) stripped = false;
      else p[i] = *pi_, q[i] = *qi;
    }
    if (stripped) {
      for (std::size_t i = 0; i < n; ++i) {
        col[i] = strip(col[i], q[i]);
        row[i] = strip(row[i], p[i]);
        for (std::size_t j = 0; j < n; ++j)
          om[i][j] = strip(om[i][j], {q[i][0] + p[j][0], q[i][1] + p[j][1], q[i][2] + p[j][2]});
      }
    } else {
      phase = additive_phase(om);
    }
    om_x = derivative(om);
    om_xx = derivative(om_x);
  }
};

}  // namespace

OmegaMatrix omega(const std::vector<Column>& thetas, const std::vector<Column>& phis,
                  const CMat& constants) {
  const std::size_t n = thetas.size();
  if (phis.size() != n || n == 0) throw ParameterError("omega: need matching nonempty theta/phi lists");
  if (constants.size() != 0 && (constants.rows() != static_cast<Eigen::Index>(n) || constants.cols() != static_cast<Eigen::Index>(n)))
    throw ParameterError("omega: integration constants must be n x n");
  OmegaMatrix out(n, std::vector<ExpPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExpPoly a = phis[i][0].conj() * thetas[j][0], b = phis[i][1].conj() * thetas[j][1];
      const cplx c = constants.size() ? constants(i, j) : cplx(0.0);
      out[i][j] = integrate(a + b, (a - b) * cplx(0.0, -1.0), c);
    }
  return out;
}

void ds2_parameter_guard(const std::vector<SpectralParams>& sps) {
  for (std::size_t k = 0; k < sps.size(); ++k)
    for (std::size_t j = k; j < sps.size(); ++j) {
      const double rk = sps[k].r, rj = sps[j].r;
      if (rk == 0.0 || rj == 0.0) throw ParameterError("ds2: r must be nonzero");
      const cplx f = rk + rj * std::exp(I * (sps[j].phi + sps[k].phi));
      if (std::abs(f) <= 1e-12 * (std::abs(rk) + std::abs(rj)))
        throw ParameterError("ds2: forbidden spectral pair (" + std::to_string(k + 1) + "," +
                             std::to_string(j + 1) + "): r_k + r_j exp(i(phi_j+phi_k)) = 0");
    }
}

Solution ds2_solution(const std::vector<Column>& thetas, const std::vector<Column>& phis,
                      const CMat& constants, const GlobalParams& gp) {
  gp.validate();
  if (gp.alpha_sq != -1) throw ParameterError("ds2_solution: the binary transformation is for DS-II (alpha^2 = -1)");
  if (thetas.size() != phis.size() || thetas.empty())
    throw ParameterError("ds2_solution: need matching nonempty theta/phi lists");
  std::shared_ptr<const Ds2Data> data = std::make_shared<const Ds2Data>(thetas, phis, constants);

  const cplx al = gp.alpha();
  const double u0 = gp.rho, w0 = gp.epsilon * gp.rho * gp.rho;
  auto f = [data, al, u0, w0](const Point& p) {
    const CMat O = eval(data->om, p);
    const ScaledLU lu(O);
    if (lu.flag() == Flag::singular) return Sample{nan, nan, true, Flag::singular};
    const auto n = O.rows();
    CVec col(n), row(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      col(i) = data->col[i](p);
      row(i) = data->row[i](p);
    }
    // det [[O, col], [row, 0]] / det O = -row O^{-1} col
    const cplx ratio = -(row.transpose() * lu.solve(col))(0, 0);
    const CMat inv = lu.inverse();
    const CMat A = inv * eval(data->om_x, p);
    const cplx lnxx = (inv * eval(data->om_xx, p)).trace() - (A * A).trace();
    return Sample{u0 - 2.0 / al * ratio, w0 - 2.0 / (al * al) * lnxx, true, lu.flag()};
  };
  auto den = [data](const Point& p) {
    cplx det = ScaledLU(eval(data->om, p)).det();
    if (data->phase)
      det *= std::exp(-((*data->phase)[0] * p.x + (*data->phase)[1] * p.y + (*data->phase)[2] * p.t));
    return det;
  };
  return Solution(gp, f, den, {{"source", "dt-ds2"}, {"n", std::to_string(thetas.size())}});
}

Solution ds2_solution(const std::vector<SpectralParams>& sps, const GlobalParams& gp,
                      const CMat& constants) {
  ds2_parameter_guard(sps);
  std::vector<Column> th, ph;
  for (const auto& sp : sps) {
    const auto e = make_superposed(sp, gp);
    th.push_back({e.xi, e.eta});
    ph.push_back(make_adjoint(th.back(), gp));
  }
  return ds2_solution(th, ph, constants, gp);
}

Solution ds2_highorder(const std::vector<SpectralParams>& sps, const std::vector<int>& r,
                       const CMat& constants, const GlobalParams& gp) {
  if (sps.size() != r.size()) throw ParameterError("ds2_highorder: one multiplicity per eigenfunction");
  ds2_parameter_guard(sps);
  std::vector<Column> th, ph;
  for (std::size_t i = 0; i < sps.size(); ++i) {
    if (r[i] < 1) throw ParameterError("ds2_highorder: multiplicity must be >= 1");
    const auto jets = superposed_jet(sps[i], gp, r[i] - 1);
    for (int j = 0; j < r[i]; ++j) {
      th.push_back({jets[0][j], jets[1][j]});
      ph.push_back(make_adjoint(th.back(), gp));
    }
  }
  Solution s = ds2_solution(th, ph, constants, gp);
  s.meta()["source"] = "dt-ds2-highorder";
  return s;
}

RemarkCheck remark_identity(const std::vector<Column>& thetas, const std::vector<Column>& phis,
                            const CMat& constants, const Point& p) {
  const OmegaMatrix om = omega(thetas, phis, constants);
  const CMat O = eval(om, p);
  const auto n = O.rows();
  CMat big = CMat::Zero(n + 2, n + 2);
  big.topLeftCorner(n, n) = O;
  for (Eigen::Index i = 0; i < n; ++i)
    for (int b = 0; b < 2; ++b) {
      big(i, n + b) = std::conj(phis[i][b](p));
      big(n + b, i) = thetas[i][b](p);
    }
  const cplx tr = quasidet(big, n, n, 2).trace();
  const ScaledLU lu(O);
  const cplx dl = -(lu.solve(eval(derivative(om), p))).trace();
  return {tr, dl, std::abs(tr - dl) / std::max(std::abs(dl), 1e-300)};
}

}  // namespace ptds
