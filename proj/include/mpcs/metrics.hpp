#pragma once

#include <array>
#include <cstdint>

#include "mpcs/bitplane.hpp"

namespace mpcs {

using Histogram = std::array<std::uint64_t, 256>;

enum class Direction { Horizontal, Vertical, Diagonal };

// per-channel Pearson coefficients over all adjacent pairs plus their mean
struct CorrelationResult {
  std::array<double, 3> channel;
  double mean;
};

std::array<Histogram, 3> histogram(const RgbImage& img);

std::array<double, 3> mean_gray(const RgbImage& img);

// sum over 256 levels of (observed - mn/256)^2 / (mn/256)
std::array<double, 3> chi_square(const RgbImage& img);

// throws std::domain_error when any channel's pair series has zero variance,
// std::invalid_argument when the image has no adjacent pairs in the direction
CorrelationResult correlation(const RgbImage& img, Direction dir);

std::array<double, 3> entropy(const RgbImage& img);

// percentage of differing pixel positions per channel
std::array<double, 3> npcr(const RgbImage& a, const RgbImage& b);

// mean |difference| / 255 per channel, as a percentage
std::array<double, 3> uaci(const RgbImage& a, const RgbImage& b);

}  // namespace mpcs
