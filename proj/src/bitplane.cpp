#include "mpcs/bitplane.hpp"

#include <stdexcept>

namespace mpcs {

namespace {

// output column -> input column for arrange()
constexpr int kArrange[24] = {0, 8,  16, 1, 9,  17, 2, 10, 18, 3, 11, 19,
                              4, 12, 20, 5, 13, 21, 6, 14, 22, 7, 15, 23};

}  // namespace

BitMatrix image_to_bitmatrix(const RgbImage& img) {
  std::size_t mn = img.pixel_count();
  BitMatrix bm;
  bm.rows = mn;
  bm.bits.resize(mn * 24);
  for (std::size_t p = 0; p < mn; ++p) {
    for (int c = 0; c < 3; ++c) {
      std::uint8_t byte = img.pixels[p * 3 + c];
      for (int bit = 0; bit < 8; ++bit) {
        bm.bits[p * 24 + c * 8 + bit] = (byte >> (7 - bit)) & 1;
      }
    }
  }
  return bm;
}

RgbImage bitmatrix_to_image(const BitMatrix& bm, std::uint32_t width,
                            std::uint32_t height) {
  std::size_t mn = static_cast<std::size_t>(width) * height;
  if (bm.rows != mn) {
    throw std::invalid_argument("bit matrix rows do not match image size");
  }
  RgbImage img;
  img.width = width;
  img.height = height;
  img.pixels.resize(mn * 3);
  for (std::size_t p = 0; p < mn; ++p) {
    for (int c = 0; c < 3; ++c) {
      std::uint8_t byte = 0;
      for (int bit = 0; bit < 8; ++bit) {
        byte = static_cast<std::uint8_t>(
            byte | (bm.bits[p * 24 + c * 8 + bit] << (7 - bit)));
      }
      img.pixels[p * 3 + c] = byte;
    }
  }
  return img;
}

std::uint64_t popcount_delta(const BitMatrix& bm) {
  std::uint64_t total = 0;
  for (std::uint8_t b : bm.bits) {
    total += b;
  }
  return total;
}

TransientCounts transient_counts(std::uint64_t delta) {
  TransientCounts tc;
  tc.henon = static_cast<std::uint32_t>(delta % 997 + 829);
  tc.lorenz = static_cast<std::uint32_t>(delta % 937 + 529);
  tc.chua = static_cast<std::uint32_t>(delta % 1097 + 719);
  tc.rossler = static_cast<std::uint32_t>(delta % 397 + 1123);
  return tc;
}

BitMatrix arrange(const BitMatrix& bm) {
  BitMatrix out;
  out.rows = bm.rows;
  out.bits.resize(bm.bits.size());
  for (std::size_t r = 0; r < bm.rows; ++r) {
    const std::uint8_t* src = &bm.bits[r * 24];
    std::uint8_t* dst = &out.bits[r * 24];
    for (int i = 0; i < 24; ++i) {
      dst[i] = src[kArrange[i]];
    }
  }
  return out;
}

BitMatrix inverse_arrange(const BitMatrix& bm) {
  BitMatrix out;
  out.rows = bm.rows;
  out.bits.resize(bm.bits.size());
  for (std::size_t r = 0; r < bm.rows; ++r) {
    const std::uint8_t* src = &bm.bits[r * 24];
    std::uint8_t* dst = &out.bits[r * 24];
    for (int i = 0; i < 24; ++i) {
      dst[kArrange[i]] = src[i];
    }
  }
  return out;
}

}  // namespace mpcs
