#include "mpcs/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace mpcs {

namespace {

void check_same_size(const RgbImage& a, const RgbImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw std::invalid_argument("image dimensions differ");
  }
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw std::domain_error("zero variance, correlation undefined");
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

std::array<Histogram, 3> histogram(const RgbImage& img) {
  std::array<Histogram, 3> hists{};
  std::size_t mn = img.pixel_count();
  for (std::size_t p = 0; p < mn; ++p) {
    for (int c = 0; c < 3; ++c) {
      ++hists[c][img.pixels[p * 3 + c]];
    }
  }
  return hists;
}

std::array<double, 3> mean_gray(const RgbImage& img) {
  std::array<double, 3> means{};
  std::size_t mn = img.pixel_count();
  std::array<std::uint64_t, 3> sums{};
  for (std::size_t p = 0; p < mn; ++p) {
    for (int c = 0; c < 3; ++c) {
      sums[c] += img.pixels[p * 3 + c];
    }
  }
  for (int c = 0; c < 3; ++c) {
    means[c] = static_cast<double>(sums[c]) / static_cast<double>(mn);
  }
  return means;
}

std::array<double, 3> chi_square(const RgbImage& img) {
  std::array<Histogram, 3> hists = histogram(img);
  double expected = static_cast<double>(img.pixel_count()) / 256.0;
  std::array<double, 3> chi{};
  for (int c = 0; c < 3; ++c) {
    double sum = 0.0;
    for (int level = 0; level < 256; ++level) {
      double d = static_cast<double>(hists[c][level]) - expected;
      sum += d * d / expected;
    }
    chi[c] = sum;
  }
  return chi;
}

CorrelationResult correlation(const RgbImage& img, Direction dir) {
  std::size_t w = img.width;
  std::size_t h = img.height;
  std::size_t dx = (dir == Direction::Vertical) ? 0 : 1;
  std::size_t dy = (dir == Direction::Horizontal) ? 0 : 1;
  if (w <= dx || h <= dy) {
    throw std::invalid_argument("image has no adjacent pairs in direction");
  }
  std::size_t pairs = (w - dx) * (h - dy);
  CorrelationResult result{};
  std::vector<double> xs(pairs), ys(pairs);
  for (int c = 0; c < 3; ++c) {
    std::size_t k = 0;
    for (std::size_t i = 0; i + dy < h; ++i) {
      for (std::size_t j = 0; j + dx < w; ++j) {
        xs[k] = img.pixels[(i * w + j) * 3 + c];
        ys[k] = img.pixels[((i + dy) * w + (j + dx)) * 3 + c];
        ++k;
      }
    }
    result.channel[c] = pearson(xs, ys);
  }
  result.mean =
      (result.channel[0] + result.channel[1] + result.channel[2]) / 3.0;
  return result;
}

std::array<double, 3> entropy(const RgbImage& img) {
  std::array<Histogram, 3> hists = histogram(img);
  double mn = static_cast<double>(img.pixel_count());
  std::array<double, 3> ent{};
  for (int c = 0; c < 3; ++c) {
    double sum = 0.0;
    for (int level = 0; level < 256; ++level) {
      if (hists[c][level] == 0) {
        continue;
      }
      double p = static_cast<double>(hists[c][level]) / mn;
      sum -= p * std::log2(p);
    }
    ent[c] = sum;
  }
  return ent;
}

std::array<double, 3> npcr(const RgbImage& a, const RgbImage& b) {
  check_same_size(a, b);
  std::size_t mn = a.pixel_count();
  std::array<std::uint64_t, 3> diff{};
  for (std::size_t p = 0; p < mn; ++p) {
    for (int c = 0; c < 3; ++c) {
      diff[c] += a.pixels[p * 3 + c] != b.pixels[p * 3 + c];
    }
  }
  std::array<double, 3> out{};
  for (int c = 0; c < 3; ++c) {
    out[c] = 100.0 * static_cast<double>(diff[c]) / static_cast<double>(mn);
  }
  return out;
}

std::array<double, 3> uaci(const RgbImage& a, const RgbImage& b) {
  check_same_size(a, b);
  std::size_t mn = a.pixel_count();
  std::array<std::uint64_t, 3> total{};
  for (std::size_t p = 0; p < mn; ++p) {
    for (int c = 0; c < 3; ++c) {
      int d = static_cast<int>(a.pixels[p * 3 + c]) -
              static_cast<int>(b.pixels[p * 3 + c]);
      total[c] += static_cast<std::uint64_t>(d < 0 ? -d : d);
    }
  }
  std::array<double, 3> out{};
  for (int c = 0; c < 3; ++c) {
    out[c] = 100.0 * static_cast<double>(total[c]) /
             (255.0 * static_cast<double>(mn));
  }
  return out;
}

}  // namespace mpcs
