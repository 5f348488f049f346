#pragma once
// CSV field dumps: header x,y,re_u,im_u,abs_u,re_w,im_w,flag, 17 significant digits.

#include <filesystem>
#include <vector>

#include "ptds/solution.hpp"

namespace ptds::cli {

struct DumpRow {
  double x, y;
  cplx u, w;
  int flag;
};

// Samples are row-major in y then x, as sample_grid returns them.
void write_csv(const std::filesystem::path& p, const std::vector<double>& xs, const std::vector<double>& ys,
               const std::vector<Sample>& s);
std::vector<DumpRow> read_csv(const std::filesystem::path& p);

}  // namespace ptds::cli
