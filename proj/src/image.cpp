#include "ulam/image.hpp"

#include <fstream>
#include <stdexcept>

namespace ulam {

CavemanCount gray_label(std::uint8_t gray) {
  switch (gray) {
    case 255: return CavemanCount(0);
    case 128: return CavemanCount(1);
    case 0: return CavemanCount(2);
    default: throw std::invalid_argument("gray_label: byte outside the palette");
  }
}

namespace {

std::string header(const char* magic, int width, int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("image: dimensions must be positive");
  return std::string(magic) + "\n" + std::to_string(width) + " " +
         std::to_string(height) + "\n255\n";
}

}  // namespace

std::string encode_pgm(int width, int height, const std::vector<std::uint8_t>& pixels) {
  if (pixels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("encode_pgm: pixel count mismatch");
  std::string out = header("P5", width, height);
  out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
  return out;
}

std::string encode_ppm(int width, int height, const std::vector<std::uint8_t>& rgb) {
  if (rgb.size() != 3u * static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("encode_ppm: pixel count mismatch");
  std::string out = header("P6", width, height);
  out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  return out;
}

std::vector<std::uint8_t> rasterize(const LabelGrid& grid) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(grid.width()) *
                               static_cast<std::size_t>(grid.height()));
  std::size_t i = 0;
  for (int row = 0; row < grid.height(); ++row) {
    const std::int64_t z = grid.z0() + grid.height() - 1 - row;
    for (int col = 0; col < grid.width(); ++col, ++i)
      px[i] = label_gray(grid.at(grid.x0() + col, z));
  }
  return px;
}

std::vector<std::uint8_t> rasterize(const BoolGrid& grid) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(grid.width()) *
                               static_cast<std::size_t>(grid.height()));
  std::size_t i = 0;
  for (int row = 0; row < grid.height(); ++row) {
    const std::int64_t z = grid.z0() + grid.height() - 1 - row;
    for (int col = 0; col < grid.width(); ++col, ++i)
      px[i] = member_gray(grid.at(grid.x0() + col, z));
  }
  return px;
}

std::vector<std::uint8_t> rasterize(const QuadrantWindow& window) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(window.width()) *
                               static_cast<std::size_t>(window.depth()));
  std::size_t i = 0;
  // Largest z in the quadrant is -1, so rows descend naturally.
  for (int zz = 1; zz <= window.depth(); ++zz)
    for (int x = 0; x < window.width(); ++x, ++i)
      px[i] = label_gray(window.at(x, -zz));
  return px;
}

void write_bytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ulam
