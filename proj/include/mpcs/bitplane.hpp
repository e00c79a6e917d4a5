#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mpcs/chaos.hpp"

namespace mpcs {

// row-major 8-bit RGB raster
struct RgbImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;  // 3 * width * height, interleaved RGB

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
};

// mn x 24 binary matrix, one byte per bit
struct BitMatrix {
  std::size_t rows = 0;
  std::vector<std::uint8_t> bits;  // rows * 24, row-major

  std::uint8_t get(std::size_t row, int col) const {
    return bits[row * 24 + col];
  }
  void set(std::size_t row, int col, std::uint8_t v) {
    bits[row * 24 + col] = v;
  }
};

// columns 0-7 R bits MSB first, 8-15 G, 16-23 B; row = raster pixel index
BitMatrix image_to_bitmatrix(const RgbImage& img);
RgbImage bitmatrix_to_image(const BitMatrix& bm, std::uint32_t width,
                            std::uint32_t height);

std::uint64_t popcount_delta(const BitMatrix& bm);

TransientCounts transient_counts(std::uint64_t delta);

// fixed column interleave R1,G1,B1,R2,G2,B2,...,R8,G8,B8
BitMatrix arrange(const BitMatrix& bm);
BitMatrix inverse_arrange(const BitMatrix& bm);

}  // namespace mpcs
