#include "ptds/solution.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ptds {

Solution::Solution(GlobalParams gp, SampleFn f, DenomFn denom, Meta meta)
    : gp_(gp), f_(std::move(f)), denom_(std::move(denom)), meta_(std::move(meta)) {}

Solution Solution::gauged(cplx c) const {
  auto f = f_;
  Solution s(gp_, [f, c](const Point& p) {
    Sample r = f(p);
    r.u *= c;
    return r;
  }, denom_, meta_);
  s.meta_["gauge"] = std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") + std::to_string(c.imag()) + "i";
  return s;
}

Solution Solution::with_w_from(const Solution& other) const {
  auto f = f_;
  auto g = other.f_;
  Solution s(gp_, [f, g](const Point& p) {
    Sample r = f(p);
    const Sample o = g(p);
    r.w = o.w;
    r.has_w = o.has_w;
    r.flag = std::max(r.flag, o.flag);
    return r;
  }, denom_, meta_);
  s.meta_["w_source"] = other.meta_.count("source") ? other.meta_.at("source") : "auxiliary";
  return s;
}

Solution Solution::corrupted(double c) const {
  auto f = f_;
  Solution s(gp_, [f, c](const Point& p) {
    Sample r = f(p);
    r.u += c * p.x;
    return r;
  }, denom_, meta_);
  s.meta_["corrupted"] = std::to_string(c);
  return s;
}

Solution Solution::seed(const GlobalParams& gp) {
  gp.validate();
  const double rho = gp.rho, w = gp.epsilon * gp.rho * gp.rho;
  return Solution(gp, [rho, w](const Point&) { return Sample{rho, w, true, Flag::regular}; },
                  [](const Point&) { return cplx(1.0); }, {{"source", "seed"}});
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, (n + 255) / 256);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  constexpr std::size_t chunk = 64;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t start = next.fetch_add(chunk);
        if (start >= n) return;
        const std::size_t stop = std::min(n, start + chunk);
        for (std::size_t i = start; i < stop; ++i) body(i);
      }
    });
  for (auto& t : pool) t.join();
}

std::vector<Sample> sample_grid(const Solution& s, const std::vector<double>& xs,
                                const std::vector<double>& ys, double t) {
  const std::size_t nx = xs.size();
  std::vector<Sample> out(nx * ys.size());
  parallel_for(out.size(), [&](std::size_t k) {
    out[k] = s(Point{xs[k % nx], ys[k / nx], t});
  });
  return out;
}

}  // namespace ptds
