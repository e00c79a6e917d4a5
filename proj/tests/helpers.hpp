#pragma once

#include <cstdint>
#include <random>

#include "mpcs/bitplane.hpp"

namespace testutil {

// deterministic smooth-gradient image: correlated neighbours, full value
// range, nontrivial bit count in every channel
inline mpcs::RgbImage make_test_image(std::uint32_t w, std::uint32_t h) {
  mpcs::RgbImage img;
  img.width = w;
  img.height = h;
  img.pixels.resize(static_cast<std::size_t>(w) * h * 3);
  for (std::uint32_t i = 0; i < h; ++i) {
    for (std::uint32_t j = 0; j < w; ++j) {
      std::uint64_t r = h > 1 ? (static_cast<std::uint64_t>(i) * 255) / (h - 1)
                              : 128;
      std::uint64_t g = (w + h > 2)
          ? (static_cast<std::uint64_t>(i + j) * 255) / (w + h - 2)
          : 128;
      std::uint64_t b =
          ((static_cast<std::uint64_t>(i) * i / (h > 1 ? h : 1) +
            static_cast<std::uint64_t>(j) * j / (w > 1 ? w : 1)) *
           255) /
          (h + w);
      std::size_t off = (static_cast<std::size_t>(i) * w + j) * 3;
      img.pixels[off] = static_cast<std::uint8_t>(r);
      img.pixels[off + 1] = static_cast<std::uint8_t>(g);
      img.pixels[off + 2] = static_cast<std::uint8_t>(b);
    }
  }
  return img;
}

inline mpcs::RgbImage random_image(std::mt19937_64& rng, std::uint32_t w,
                                   std::uint32_t h) {
  mpcs::RgbImage img;
  img.width = w;
  img.height = h;
  img.pixels.resize(static_cast<std::size_t>(w) * h * 3);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& px : img.pixels) {
    px = static_cast<std::uint8_t>(byte(rng));
  }
  return img;
}

}  // namespace testutil
