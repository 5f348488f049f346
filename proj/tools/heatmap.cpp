#include "heatmap.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace ptds::cli {

namespace {

// Dark blue -> teal -> yellow.
std::array<png_byte, 3> ramp(double s) {
  static const double stops[][3] = {{13, 8, 135}, {33, 145, 140}, {253, 231, 37}};
  s = std::clamp(s, 0.0, 1.0) * 2;
  const int i = std::min(int(s), 1);
  const double f = s - i;
  std::array<png_byte, 3> c{};
  for (int k = 0; k < 3; ++k) c[k] = png_byte(std::lround(stops[i][k] + f * (stops[i + 1][k] - stops[i][k])));
  return c;
}

}  // namespace

void write_heatmap(const std::string& path, const std::vector<Sample>& s, int nx, int ny, double ceiling) {
  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!fp) throw std::runtime_error("cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("libpng initialisation failed");
  }
  std::vector<png_byte> row(3 * std::size_t(nx));
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng error writing " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, nx, ny, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int j = ny - 1; j >= 0; --j) {
    for (int i = 0; i < nx; ++i) {
      const Sample& v = s[std::size_t(j) * nx + i];
      const double a = std::abs(v.u);
      std::array<png_byte, 3> c{255, 0, 255};
      if (v.flag == Flag::regular && std::isfinite(a)) c = ramp(std::min(a, ceiling) / ceiling);
      std::copy(c.begin(), c.end(), row.begin() + 3 * i);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace ptds::cli
