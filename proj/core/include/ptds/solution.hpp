#pragma once
// An evaluable pair of fields (u, w) plus the denominator whose zeros are the
// blow-up locus.  Catalog closed forms and Darboux pipelines both produce one.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ptds/common.hpp"

namespace ptds {

struct Sample {
  cplx u = 0.0;
  cplx w = 0.0;
  bool has_w = false;
  Flag flag = Flag::regular;
};

class Solution {
 public:
  using SampleFn = std::function<Sample(const Point&)>;
  using DenomFn = std::function<cplx(const Point&)>;
  using Meta = std::map<std::string, std::string>;

  Solution() = default;
  Solution(GlobalParams gp, SampleFn f, DenomFn denom, Meta meta = {});

  Sample operator()(const Point& p) const { return f_(p); }
  cplx denominator(const Point& p) const { return denom_(p); }
  bool valid() const { return static_cast<bool>(f_); }

  const GlobalParams& params() const { return gp_; }
  const Meta& meta() const { return meta_; }
  Meta& meta() { return meta_; }

  // u -> c u; w untouched.  A unimodular c maps solutions to solutions.
  Solution gauged(cplx c) const;
  // Take w (and its flag) from another handle on the same system.
  Solution with_w_from(const Solution& other) const;
  // Corrupt u by c x; only used to exercise the verifier.
  Solution corrupted(double c) const;

  static Solution seed(const GlobalParams& gp);

 private:
  GlobalParams gp_;
  SampleFn f_;
  DenomFn denom_;
  Meta meta_;
};

// Samples on the tensor grid xs x ys at time t, row-major in y then x
// (index j * xs.size() + i).  Evaluation is spread over hardware threads.
std::vector<Sample> sample_grid(const Solution& s, const std::vector<double>& xs,
                                const std::vector<double>& ys, double t);

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ptds
