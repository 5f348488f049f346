#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ptds/exppoly.hpp"
#include "ptds/quasidet.hpp"

namespace ptds::testing {

inline std::vector<Point> random_points(std::mt19937& rng, int n, double box = 2.0) {
  std::uniform_real_distribution<double> d(-box, box);
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {d(rng), d(rng), d(rng)};
  return pts;
}

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline CMat random_matrix(std::mt19937& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> n;
  CMat m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = {n(rng), n(rng)};
  return m;
}

// All nine blocks b x b (b = 1 is the scalar case).
inline SylvesterBlocks random_sylvester(std::mt19937& rng, Eigen::Index b) {
  auto g = [&] { return random_matrix(rng, b, b); };
  return {g(), g(), g(), g(), g(), g(), g(), g(), g()};
}

}  // namespace ptds::testing
