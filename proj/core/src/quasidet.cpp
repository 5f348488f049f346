#include "ptds/quasidet.hpp"

#include <vector>

namespace ptds {

namespace {

std::vector<Eigen::Index> complement(Eigen::Index n, Eigen::Index start, Eigen::Index len) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < n; ++i)
    if (i < start || i >= start + len) idx.push_back(i);
  return idx;
}

std::vector<Eigen::Index> range(Eigen::Index start, Eigen::Index len) {
  std::vector<Eigen::Index> idx(len);
  for (Eigen::Index i = 0; i < len; ++i) idx[i] = start + i;
  return idx;
}

CMat block2(const CMat& a, const CMat& b, const CMat& c, const CMat& d) {
  CMat m(a.rows() + c.rows(), a.cols() + b.cols());
  m << a, b, c, d;
  return m;
}

// Boxed bottom-right block of [[a b], [c d]].
CMat qd(const CMat& a, const CMat& b, const CMat& c, const CMat& d) {
  return quasidet(block2(a, b, c, d), a.rows(), a.cols(), d.rows());
}

double rel(const CMat& lhs, const CMat& rhs) {
  const double scale = std::max(lhs.norm(), 1e-300);
  return (lhs - rhs).norm() / scale;
}

}  // namespace

CMat quasidet(const CMat& m, Eigen::Index r0, Eigen::Index c0, Eigen::Index b) {
  if (m.rows() != m.cols() || r0 < 0 || c0 < 0 || r0 + b > m.rows() || c0 + b > m.cols())
    throw ParameterError("quasidet: boxed block out of range");
  const auto R = range(r0, b), C = range(c0, b);
  const auto Rc = complement(m.rows(), r0, b), Cc = complement(m.cols(), c0, b);
  const CMat mrc = m(R, C);
  if (Rc.empty()) return mrc;
  const CMat minor = m(Rc, Cc);
  const ScaledLU lu(minor);
  if (lu.flag() != Flag::regular) throw SingularPointError("quasidet: singular minor");
  return mrc - CMat(m(R, Cc)) * lu.solve(m(Rc, C));
}

CMat assemble(const SylvesterBlocks& s) {
  const Eigen::Index n = s.E.rows() + s.H.rows() + s.J.rows();
  CMat m(n, n);
  m << s.E, s.F, s.G, s.H, s.A, s.B, s.J, s.C, s.D;
  return m;
}

SylvesterSides sylvester_sides(const SylvesterBlocks& s) {
  const Eigen::Index b = s.D.rows();
  const CMat M = assemble(s);
  const CMat lhs = quasidet(M, M.rows() - b, M.cols() - b, b);
  const CMat EGJD = qd(s.E, s.G, s.J, s.D);
  const CMat EFJC = qd(s.E, s.F, s.J, s.C);
  const CMat EFHA = qd(s.E, s.F, s.H, s.A);
  const CMat EGHB = qd(s.E, s.G, s.H, s.B);
  const ScaledLU lu(EFHA);
  if (lu.flag() != Flag::regular) throw SingularPointError("sylvester: singular pivot block");
  return {lhs, EGJD - EFJC * lu.solve(EGHB)};
}

double SylvesterSides::defect() const { return rel(lhs, rhs); }

double sylvester_defect(const SylvesterBlocks& s) { return sylvester_sides(s).defect(); }

bool sylvester_check(const SylvesterBlocks& s, double tol) { return sylvester_defect(s) <= tol; }

double sylvester_defect_as_printed(const SylvesterBlocks& s) {
  const Eigen::Index b = s.D.rows();
  const CMat M = assemble(s);
  const CMat lhs = quasidet(M, M.rows() - b, M.cols() - b, b);
  const CMat EFJD = qd(s.E, s.F, s.J, s.D);
  const CMat EFJC = qd(s.E, s.F, s.J, s.C);
  const CMat EFJA = qd(s.E, s.F, s.J, s.A);
  const CMat EGHB = qd(s.E, s.G, s.H, s.B);
  const ScaledLU lu(EFJA);
  if (lu.flag() != Flag::regular) throw SingularPointError("sylvester: singular pivot block");
  return rel(lhs, EFJD - EFJC * lu.solve(EGHB));
}

}  // namespace ptds
