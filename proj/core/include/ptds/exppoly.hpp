#pragma once
// Exponential polynomials: finite sums  c * x^a y^b t^c * exp(p x + q y + s t)
// with complex c, p, q, s.  This is the closed function class of every
// eigenfunction on a constant background, so the Darboux machinery never
// needs anything richer.

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace ptds {

using cplx = std::complex<double>;

enum class Var : int { x = 0, y = 1, t = 2 };

struct Point {
  double x = 0, y = 0, t = 0;
};

using Powers = std::array<int, 3>;
using Phase = std::array<cplx, 3>;

struct Term {
  cplx coeff;
  Powers pow{0, 0, 0};
  Phase phase{};
};

class ExpPoly {
 public:
  // Coefficients at or below this modulus are dropped during canonicalization.
  static constexpr double coeff_tol = 1e-14;
  // Phases are rounded to this grid so that float noise cannot split terms.
  static constexpr double phase_grid = 1e-12;

  ExpPoly() = default;
  explicit ExpPoly(std::vector<Term> terms);

  static ExpPoly constant(cplx c);
  static ExpPoly monomial(cplx c, Powers pow, Phase phase = {});
  static ExpPoly exponential(Phase phase, cplx c = 1.0);
  static ExpPoly variable(Var v);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  cplx eval(const Point& p) const;
  cplx operator()(const Point& p) const { return eval(p); }

  ExpPoly derivative(Var v, int order = 1) const;
  ExpPoly antideriv_x(cplx constant = 0.0) const;
  // Termwise; a zero phase in v integrates the polynomial factor only.
  ExpPoly antideriv(Var v, cplx constant = 0.0) const;

  ExpPoly reflect() const;       // f(-x, y, t)
  ExpPoly conj() const;          // conj(f)(x, y, t), x y t real
  ExpPoly reflect_conj() const;  // conj(f)(-x, y, t)

  // The exponential factor shared by every term, if there is one.
  std::optional<Phase> common_phase() const;

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(cplx s);

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(ExpPoly a, cplx s) { return a *= s; }
  friend ExpPoly operator*(cplx s, ExpPoly a) { return a *= s; }
  friend ExpPoly operator+(ExpPoly a, cplx s) { return a += constant(s); }
  friend ExpPoly operator+(cplx s, ExpPoly a) { return a += constant(s); }

  // Term-for-term equality of canonical forms (coefficients compared to tol).
  bool same_as(const ExpPoly& o, double tol = 1e-12) const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

// Truncated power series in a perturbation parameter delta whose
// coefficients are exponential polynomials.
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::vector<ExpPoly> c) : c_(std::move(c)) {}
  static Jet constant(const ExpPoly& f, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const ExpPoly& operator[](int k) const { return c_.at(k); }
  ExpPoly& operator[](int k) { return c_.at(k); }
  const std::vector<ExpPoly>& coeffs() const { return c_; }

  Jet truncated(int order) const;
  Jet derivative(Var v) const;
  Jet reflect_conj() const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, cplx s);
  friend Jet operator*(cplx s, const Jet& a) { return a * s; }

 private:
  std::vector<ExpPoly> c_;
};

// exp(w) for a jet whose zeroth coefficient vanishes; the result starts at 1.
Jet jet_exp_nilpotent(const Jet& w);

// Scalar truncated series helpers used for spectral-parameter expansions.
using Series = std::vector<cplx>;
Series series_mul(const Series& a, const Series& b);
Jet series_times(const Series& s, const Jet& j);

}  // namespace ptds
