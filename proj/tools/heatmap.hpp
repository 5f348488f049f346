#pragma once

#include <string>
#include <vector>

#include "ptds/solution.hpp"

namespace ptds::cli {

// |u| on the grid (row-major, y then x), clipped at ceiling; flagged samples
// in magenta.  Top row is y = ymax.
void write_heatmap(const std::string& path, const std::vector<Sample>& s, int nx, int ny, double ceiling);

}  // namespace ptds::cli
