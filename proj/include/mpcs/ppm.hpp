#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpcs/bitplane.hpp"

namespace mpcs {

// binary PPM (P6), maxval 255 only; '#' comments allowed in the header
RgbImage read_ppm(const std::vector<std::uint8_t>& bytes);

// canonical header "P6\n<w> <h>\n255\n" followed by raw RGB
std::vector<std::uint8_t> write_ppm(const RgbImage& img);

RgbImage load_ppm(const std::string& path);
void save_ppm(const std::string& path, const RgbImage& img);

}  // namespace mpcs
