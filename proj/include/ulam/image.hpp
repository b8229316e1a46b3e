// Deterministic PGM/PPM encoding of grids. Figures put the origin at the
// bottom-left with z upward, so raster row 0 carries the largest z.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulam/culam.hpp"
#include "ulam/oracle.hpp"
#include "ulam/padic.hpp"

namespace ulam {

// Palette: label 0 -> 255 (white), 1 -> 128 (gray), 2 -> 0 (black).
constexpr std::uint8_t label_gray(CavemanCount c) {
  return c.value() == 0 ? 255 : (c.value() == 1 ? 128 : 0);
}
// Boolean grids: member -> 0, non-member -> 255.
constexpr std::uint8_t member_gray(bool member) { return member ? 0 : 255; }

// Inverse of label_gray; throws on a byte outside the palette.
CavemanCount gray_label(std::uint8_t gray);

std::string encode_pgm(int width, int height, const std::vector<std::uint8_t>& pixels);
// rgb is 3 bytes per pixel, row-major.
std::string encode_ppm(int width, int height, const std::vector<std::uint8_t>& rgb);

std::vector<std::uint8_t> rasterize(const LabelGrid& grid);
std::vector<std::uint8_t> rasterize(const BoolGrid& grid);
std::vector<std::uint8_t> rasterize(const QuadrantWindow& window);

void write_bytes(const std::string& path, const std::string& bytes);

}  // namespace ulam
