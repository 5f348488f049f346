#include "ptds/ds1.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "ptds/linalg.hpp"

namespace ptds {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// Column c of the Darboux matrix and its x-derivatives up to N+1.
struct Ds1Data {
  int N = 0;
  std::vector<std::vector<Column>> d;  // d[order][column]
  std::optional<Phase> phase_sum;      // common exponential factor of det Sigma

  Ds1Data(const std::vector<EigenMatrix>& eigens) : N(static_cast<int>(eigens.size())) {
    if (N == 0) throw ParameterError("ds1: at least one eigenfunction matrix required");
    std::vector<Column> cols;
    for (const auto& th : eigens) {
      cols.push_back(th.column(0));
      cols.push_back(th.column(1));
    }
    d.push_back(cols);
    for (int k = 1; k <= N + 1; ++k) {
      std::vector<Column> next;
      for (const auto& c : d.back()) next.push_back({c[0].derivative(Var::x), c[1].derivative(Var::x)});
      d.push_back(std::move(next));
    }
    Phase sum{};
    for (const auto& c : cols) {
      auto p0 = c[0].common_phase(), p1 = c[1].common_phase();
      if (!p0 || !p1 || *p0 != *p1) return;
      for (int i = 0; i < 3; ++i) sum[i] += (*p0)[i];
    }
    phase_sum = sum;
  }

  struct Eval {
    CMat sig, sig_x, sig_xx, W, W_x;
  };

  Eval eval(const Point& p) const {
    const int n = 2 * N;
    std::vector<std::vector<std::array<cplx, 2>>> v(N + 2, std::vector<std::array<cplx, 2>>(n));
    for (int k = 0; k <= N + 1; ++k)
      for (int c = 0; c < n; ++c) v[k][c] = {d[k][c][0](p), d[k][c][1](p)};
    Eval e{CMat(n, n), CMat(n, n), CMat(n, n), CMat(2, n), CMat(2, n)};
    for (int j = 0; j < N; ++j)
      for (int c = 0; c < n; ++c)
        for (int a = 0; a < 2; ++a) {
          const int order = N - 1 - j;
          e.sig(2 * j + a, c) = v[order][c][a];
          e.sig_x(2 * j + a, c) = v[order + 1][c][a];
          e.sig_xx(2 * j + a, c) = v[order + 2][c][a];
        }
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < 2; ++a) {
        e.W(a, c) = v[N][c][a];
        e.W_x(a, c) = v[N + 1][c][a];
      }
    return e;
  }

  cplx denominator(const Point& p) const {
    const auto e = eval(p);
    cplx det = ScaledLU(e.sig).det();
    if (phase_sum) det *= std::exp(-((*phase_sum)[0] * p.x + (*phase_sum)[1] * p.y + (*phase_sum)[2] * p.t));
    return det;
  }
};

}  // namespace

OnefoldResult onefold_potential(const EigenMatrix& th, const GlobalParams& gp, const Point& p) {
  gp.validate();
  Eigen::Matrix2cd m, mx;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      m(a, b) = th.m[a][b](p);
      mx(a, b) = th.m[a][b].derivative(Var::x)(p);
    }
  if (std::abs(m.determinant()) < 1e-12) throw SingularPointError("onefold: det theta vanishes");
  const Eigen::Matrix2cd S = mx * m.inverse();
  const ExpPoly det = th.m[0][0] * th.m[1][1] - th.m[0][1] * th.m[1][0];
  const cplx d0 = det(p), d1 = det.derivative(Var::x)(p), d2 = det.derivative(Var::x, 2)(p);
  const cplx lnxx = d2 / d0 - (d1 / d0) * (d1 / d0);
  const cplx al = gp.alpha();
  return {gp.rho + 2.0 / al * S(0, 1), gp.epsilon * gp.rho * gp.rho - 2.0 / (al * al) * lnxx};
}

Ds1Inspection ds1_inspect(const std::vector<EigenMatrix>& eigens, const GlobalParams& gp,
                          const Point& p) {
  gp.validate();
  const Ds1Data data(eigens);
  const auto e = data.eval(p);
  const ScaledLU lu(e.sig);
  const CMat inv = lu.inverse();
  const CMat s = e.W * inv;
  const CMat sx = e.W_x * inv - e.W * inv * e.sig_x * inv;
  const CMat A = inv * e.sig_x;
  const cplx lnxx = (inv * e.sig_xx).trace() - (A * A).trace();
  const cplx al2 = gp.alpha() * gp.alpha();
  const double w0 = gp.epsilon * gp.rho * gp.rho;

  CMat s12 = e.sig, s21 = e.sig;
  s12.row(1) = e.W.row(0);
  s21.row(0) = e.W.row(1);
  return {s(0, 1), s(1, 0), e.sig.determinant(), s12.determinant(), s21.determinant(),
          w0 - 2.0 / al2 * lnxx, w0 - 2.0 / al2 * sx.block(0, 0, 2, 2).trace(), lu.flag()};
}

Solution ds1_solution(const std::vector<EigenMatrix>& eigens, const GlobalParams& gp) {
  gp.validate();
  auto data = std::make_shared<const Ds1Data>(eigens);
  const cplx al = gp.alpha();
  const double u0 = gp.rho, w0 = gp.epsilon * gp.rho * gp.rho;
  auto f = [data, al, u0, w0](const Point& p) {
    const auto e = data->eval(p);
    const ScaledLU lu(e.sig);
    if (lu.flag() == Flag::singular) return Sample{nan, nan, true, Flag::singular};
    const CMat inv = lu.inverse();
    // (s_1)_{12} = det Sigma^{1,2} / det Sigma by Cramer's rule on x Sigma = W_1.
    const cplx s12 = (e.W.row(0) * inv)(0, 1);
    const CMat A = inv * e.sig_x;
    const cplx lnxx = (inv * e.sig_xx).trace() - (A * A).trace();
    return Sample{u0 + 2.0 / al * s12, w0 - 2.0 / (al * al) * lnxx, true, lu.flag()};
  };
  auto den = [data](const Point& p) { return data->denominator(p); };
  return Solution(gp, f, den, {{"source", "dt-ds1"}, {"N", std::to_string(eigens.size())}});
}

Solution ds1_highorder(const std::vector<SpectralParams>& sps, const std::vector<int>& m,
                       const GlobalParams& gp) {
  if (sps.size() != m.size()) throw ParameterError("ds1_highorder: one multiplicity per eigenfunction");
  std::vector<EigenMatrix> eigens;
  for (std::size_t i = 0; i < sps.size(); ++i) {
    if (m[i] < 0) throw ParameterError("ds1_highorder: negative multiplicity");
    const auto jets = superposed_jet(sps[i], gp, m[i]);
    for (int j = 0; j <= m[i]; ++j) eigens.push_back(make_eigen_matrix({jets[0][j], jets[1][j]}, gp));
  }
  Solution s = ds1_solution(eigens, gp);
  s.meta()["source"] = "dt-ds1-highorder";
  return s;
}

}  // namespace ptds
