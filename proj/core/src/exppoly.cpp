#include "ptds/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace ptds {

namespace {

double snap(double v) {
  double r = std::round(v / ExpPoly::phase_grid) * ExpPoly::phase_grid;
  return r == 0.0 ? 0.0 : r;  // no negative zero in keys
}

cplx snap(cplx z) { return {snap(z.real()), snap(z.imag())}; }

auto key(const Term& t) {
  return std::make_tuple(t.phase[0].real(), t.phase[0].imag(), t.phase[1].real(),
                         t.phase[1].imag(), t.phase[2].real(), t.phase[2].imag(),
                         t.pow[0], t.pow[1], t.pow[2]);
}

bool same_phase(const Phase& a, const Phase& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

double ipow(double v, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= v;
  return r;
}

}  // namespace

ExpPoly::ExpPoly(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

ExpPoly ExpPoly::constant(cplx c) { return ExpPoly({Term{c, {0, 0, 0}, {}}}); }

ExpPoly ExpPoly::monomial(cplx c, Powers pow, Phase phase) {
  for (int p : pow)
    if (p < 0) throw std::invalid_argument("ExpPoly: negative power");
  return ExpPoly({Term{c, pow, phase}});
}

ExpPoly ExpPoly::exponential(Phase phase, cplx c) { return monomial(c, {0, 0, 0}, phase); }

ExpPoly ExpPoly::variable(Var v) {
  Powers p{0, 0, 0};
  p[static_cast<int>(v)] = 1;
  return monomial(1.0, p);
}

void ExpPoly::canonicalize() {
  for (auto& t : terms_)
    for (auto& z : t.phase) z = snap(z);
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return key(a) < key(b); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().pow == t.pow && same_phase(out.back().phase, t.phase))
      out.back().coeff += t.coeff;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return std::abs(t.coeff) <= coeff_tol; });
  terms_ = std::move(out);
}

cplx ExpPoly::eval(const Point& p) const {
  cplx acc = 0.0;
  const Phase* last = nullptr;
  cplx e = 0.0;
  for (const auto& t : terms_) {
    // Terms are sorted by phase first, so consecutive terms share exp().
    if (!last || !same_phase(*last, t.phase)) {
      e = std::exp(t.phase[0] * p.x + t.phase[1] * p.y + t.phase[2] * p.t);
      last = &t.phase;
    }
    acc += t.coeff * ipow(p.x, t.pow[0]) * ipow(p.y, t.pow[1]) * ipow(p.t, t.pow[2]) * e;
  }
  return acc;
}

ExpPoly ExpPoly::derivative(Var v, int order) const {
  if (order < 0) throw std::invalid_argument("ExpPoly: negative derivative order");
  const int k = static_cast<int>(v);
  ExpPoly cur = *this;
  for (int n = 0; n < order; ++n) {
    std::vector<Term> out;
    out.reserve(2 * cur.terms_.size());
    for (const auto& t : cur.terms_) {
      if (t.phase[k] != 0.0) out.push_back({t.coeff * t.phase[k], t.pow, t.phase});
      if (t.pow[k] > 0) {
        Term d = t;
        d.coeff *= static_cast<double>(t.pow[k]);
        d.pow[k] -= 1;
        out.push_back(d);
      }
    }
    cur = ExpPoly(std::move(out));
  }
  return cur;
}

ExpPoly ExpPoly::antideriv_x(cplx constant) const { return antideriv(Var::x, constant); }

ExpPoly ExpPoly::antideriv(Var v, cplx constant) const {
  const int k0 = static_cast<int>(v);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const cplx p = t.phase[k0];
    const int a = t.pow[k0];
    if (p == 0.0) {
      Term r = t;
      r.pow[k0] += 1;
      r.coeff /= static_cast<double>(a + 1);
      out.push_back(r);
      continue;
    }
    // \int x^a e^{px} = e^{px} sum_k (-1)^k a!/(a-k)! x^{a-k} / p^{k+1}
    cplx c = t.coeff / p;
    for (int k = 0; k <= a; ++k) {
      Term r = t;
      r.pow[k0] = a - k;
      r.coeff = c;
      out.push_back(r);
      c *= -static_cast<double>(a - k) / p;
    }
  }
  if (constant != 0.0) out.push_back({constant, {0, 0, 0}, {}});
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::reflect() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.phase[0] = -t.phase[0];
    if (t.pow[0] % 2) t.coeff = -t.coeff;
  }
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::conj() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.coeff = std::conj(t.coeff);
    for (auto& z : t.phase) z = std::conj(z);
  }
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::reflect_conj() const { return conj().reflect(); }

std::optional<Phase> ExpPoly::common_phase() const {
  if (terms_.empty()) return std::nullopt;
  const Phase& ph = terms_.front().phase;
  for (const auto& t : terms_)
    if (!same_phase(t.phase, ph)) return std::nullopt;
  return ph;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) { return *this += -o; }

ExpPoly& ExpPoly::operator*=(cplx s) {
  for (auto& t : terms_) t.coeff *= s;
  std::erase_if(terms_, [](const Term& t) { return std::abs(t.coeff) <= coeff_tol; });
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      out.push_back({s.coeff * t.coeff,
                     {s.pow[0] + t.pow[0], s.pow[1] + t.pow[1], s.pow[2] + t.pow[2]},
                     {s.phase[0] + t.phase[0], s.phase[1] + t.phase[1], s.phase[2] + t.phase[2]}});
  return ExpPoly(std::move(out));
}

bool ExpPoly::same_as(const ExpPoly& o, double tol) const {
  ExpPoly d = *this - o;
  for (const auto& t : d.terms_)
    if (std::abs(t.coeff) > tol) return false;
  return true;
}

// ---------------------------------------------------------------- Jet

Jet Jet::constant(const ExpPoly& f, int order) {
  std::vector<ExpPoly> c(order + 1);
  c[0] = f;
  return Jet(std::move(c));
}

Jet Jet::truncated(int order) const {
  std::vector<ExpPoly> c(c_.begin(), c_.begin() + std::min<std::size_t>(order + 1, c_.size()));
  return Jet(std::move(c));
}

Jet Jet::derivative(Var v) const {
  std::vector<ExpPoly> c;
  c.reserve(c_.size());
  for (const auto& f : c_) c.push_back(f.derivative(v));
  return Jet(std::move(c));
}

Jet Jet::reflect_conj() const {
  // delta is real, so conjugation acts coefficientwise.
  std::vector<ExpPoly> c;
  c.reserve(c_.size());
  for (const auto& f : c_) c.push_back(f.reflect_conj());
  return Jet(std::move(c));
}

Jet operator+(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order()) + 1;
  std::vector<ExpPoly> c(n);
  for (int k = 0; k < n; ++k) c[k] = a[k] + b[k];
  return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) { return a + b * cplx(-1.0); }

Jet operator*(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order()) + 1;
  std::vector<ExpPoly> c(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i <= k; ++i)
      if (!a[i].is_zero() && !b[k - i].is_zero()) c[k] += a[i] * b[k - i];
  return Jet(std::move(c));
}

Jet operator*(const Jet& a, cplx s) {
  std::vector<ExpPoly> c = a.c_;
  for (auto& f : c) f *= s;
  return Jet(std::move(c));
}

Jet jet_exp_nilpotent(const Jet& w) {
  if (!w[0].is_zero()) throw std::invalid_argument("jet_exp_nilpotent: nonzero constant term");
  const int n = w.order() + 1;
  std::vector<ExpPoly> e(n);
  e[0] = ExpPoly::constant(1.0);
  // e_k = (1/k) sum_{j=1..k} j w_j e_{k-j}
  for (int k = 1; k < n; ++k) {
    ExpPoly acc;
    for (int j = 1; j <= k; ++j) acc += (w[j] * e[k - j]) * cplx(static_cast<double>(j));
    e[k] = acc * cplx(1.0 / k);
  }
  return Jet(std::move(e));
}

Series series_mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series c(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= k; ++i) c[k] += a[i] * b[k - i];
  return c;
}

Jet series_times(const Series& s, const Jet& j) {
  const int n = std::min<int>(static_cast<int>(s.size()), j.order() + 1);
  std::vector<ExpPoly> c(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i <= k; ++i)
      if (s[i] != 0.0) c[k] += j[k - i] * s[i];
  return Jet(std::move(c));
}

}  // namespace ptds
