#include "field_dump.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ptds::cli {

namespace {
const char* header = "x,y,re_u,im_u,abs_u,re_w,im_w,flag";
}

void write_csv(const std::filesystem::path& p, const std::vector<double>& xs, const std::vector<double>& ys,
               const std::vector<Sample>& s) {
  std::ofstream f(p);
  f << header << '\n';
  char line[512];
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Sample& v = s[k];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", xs[k % xs.size()],
                  ys[k / xs.size()], v.u.real(), v.u.imag(), std::abs(v.u), v.w.real(), v.w.imag(), int(v.flag));
    f << line;
  }
  f.close();
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

std::vector<DumpRow> read_csv(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::string line;
  if (!std::getline(f, line) || line != header) throw std::runtime_error(p.string() + ": unexpected header");
  std::vector<DumpRow> rows;
  while (std::getline(f, line)) {
    std::stringstream ss(line);
    std::string cell;
    double v[8];
    for (double& d : v) {
      if (!std::getline(ss, cell, ',')) throw std::runtime_error(p.string() + ": short row");
      d = std::stod(cell);
    }
    rows.push_back({v[0], v[1], {v[2], v[3]}, {v[5], v[6]}, int(v[7])});
  }
  return rows;
}

}  // namespace ptds::cli
