#pragma once
// Blow-up diagnostics: analytic critical times, loci and intervals for the
// catalog families, and the numeric search for zeros of a denominator.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ptds/catalog.hpp"
#include "ptds/verify.hpp"

namespace ptds {

// a x^2 + b xy + c y^2 + d x + e y + f = 0
struct Conic {
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  double operator()(double x, double y) const { return a * x * x + b * x * y + c * y * y + d * x + e * y + f; }
  // From the discriminant b^2 - 4ac of the quadratic part.
  std::string type() const;
};

// cx x + cy y + ct t + c0 = 0
struct Line {
  double cx = 0, cy = 0, ct = 0, c0 = 0;
};

enum class SingularityKind { point_time, interval, none };
std::string kind_name(SingularityKind k);

struct SingularityReport {
  SingularityKind kind = SingularityKind::none;
  std::optional<double> t_c;
  std::optional<std::array<double, 2>> interval;
  std::optional<Conic> locus;  // at t_c; never set when kind is none
  std::string notes;
};

// phi1 = k pi branch of the DS-I fundamental solution, r1^2 != 1.  For
// eps = -1 the printed interval I_c is added (ordered t- <= t+).
SingularityReport ds1_critical_time(const FamilyParams& p);
// Every ds1_fundamental branch: r1^2 = 1 and the travelling branch give kind none.
SingularityReport ds1_singularity(const FamilyParams& p);

std::array<double, 2> ds1_two_rogue_interval(double r1);

// eps = 1, r1 = 1; cos(phi1) = 0 gives kind none (u = 1).
SingularityReport ds2_critical_time(const FamilyParams& p);

// Real roots of (16 sqrt2 - 20) c^2 + (88 - 64 sqrt2) c + 52 sqrt2 - 73.
std::array<double, 2> ds2_two_rational_interval();

struct RidgeReport {
  Line l1, l2;
  std::optional<double> angle_printed;  // DS-II: 2 phi1
  double angle_between = 0;             // acute angle between the two lines, in [0, pi/2]
};
RidgeReport ridge_lines(FamilyId id, const FamilyParams& p);

// Analytic report for any family the module covers; ParameterError otherwise.
SingularityReport family_singularity(FamilyId id, const FamilyParams& p);

struct BlowupPoint {
  double x, y, abs_den;
};

// Coarse n x n scan of the denominator, bisection of Re along cell edges where
// it changes sign, Newton in cells where both Re and Im change sign; keeps
// points with |den| <= 1e-8, deduplicated.
std::vector<BlowupPoint> locate_blowup(const Solution& sol, double t, const Box& box, int n = 200);

// min over the box of |den(x, y, t)|: grid scan plus Levenberg-Marquardt from the best cells.
double min_abs_denominator(const Solution& sol, double t, const Box& box, int n = 60);

// argmin over [t_lo, t_hi] of min_abs_denominator (scan + golden section).
double numeric_critical_time(const Solution& sol, double t_lo, double t_hi, const Box& box);

// First and last t in [t_lo, t_hi] where locate_blowup finds a zero in the box.
// Zeros that leave the box end the interval early, so the box must contain them.
std::optional<std::array<double, 2>> numeric_singular_interval(const Solution& sol, double t_lo, double t_hi,
                                                               const Box& box, int n = 200);

}  // namespace ptds
