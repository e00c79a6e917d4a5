#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "mpcs/metrics.hpp"

using namespace mpcs;

namespace {

RgbImage constant_image(std::uint32_t w, std::uint32_t h, std::uint8_t r,
                        std::uint8_t g, std::uint8_t b) {
  RgbImage img{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) *
                                               h * 3)};
  for (std::size_t p = 0; p < img.pixel_count(); ++p) {
    img.pixels[p * 3] = r;
    img.pixels[p * 3 + 1] = g;
    img.pixels[p * 3 + 2] = b;
  }
  return img;
}

// every channel histogram is exactly flat
RgbImage uniform_image() {
  RgbImage img{256, 256, std::vector<std::uint8_t>(256 * 256 * 3)};
  for (std::uint32_t i = 0; i < 256; ++i) {
    for (std::uint32_t j = 0; j < 256; ++j) {
      std::size_t off = (static_cast<std::size_t>(i) * 256 + j) * 3;
      img.pixels[off] = static_cast<std::uint8_t>(i);
      img.pixels[off + 1] = static_cast<std::uint8_t>(j);
      img.pixels[off + 2] = static_cast<std::uint8_t>((i + j) & 255);
    }
  }
  return img;
}

RgbImage checkerboard(std::uint32_t w, std::uint32_t h) {
  RgbImage img{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) *
                                               h * 3)};
  for (std::uint32_t i = 0; i < h; ++i) {
    for (std::uint32_t j = 0; j < w; ++j) {
      std::uint8_t v = ((i + j) & 1) ? 255 : 0;
      std::size_t off = (static_cast<std::size_t>(i) * w + j) * 3;
      img.pixels[off] = v;
      img.pixels[off + 1] = v;
      img.pixels[off + 2] = v;
    }
  }
  return img;
}

}  // namespace

TEST_CASE("histogram") {
  RgbImage black = constant_image(16, 16, 0, 0, 0);
  auto hists = histogram(black);
  for (int c = 0; c < 3; ++c) {
    CHECK(hists[c][0] == 256);
    std::uint64_t sum = 0;
    for (auto n : hists[c]) {
      sum += n;
    }
    CHECK(sum == 256);
  }

  RgbImage gradient{256, 1, std::vector<std::uint8_t>(256 * 3, 0)};
  for (std::uint32_t j = 0; j < 256; ++j) {
    gradient.pixels[j * 3] = static_cast<std::uint8_t>(j);
  }
  auto ghists = histogram(gradient);
  for (int level = 0; level < 256; ++level) {
    CHECK(ghists[0][level] == 1);
  }
  CHECK(ghists[1][0] == 256);
}

TEST_CASE("mean_gray closed forms") {
  RgbImage flat = constant_image(9, 7, 180, 99, 105);
  auto means = mean_gray(flat);
  CHECK(means[0] == 180.0);
  CHECK(means[1] == 99.0);
  CHECK(means[2] == 105.0);

  auto board = mean_gray(checkerboard(16, 16));
  CHECK(board[0] == 127.5);
  CHECK(board[1] == 127.5);
  CHECK(board[2] == 127.5);
}

TEST_CASE("chi_square closed forms") {
  auto flat = chi_square(uniform_image());
  CHECK(flat[0] == 0.0);
  CHECK(flat[1] == 0.0);
  CHECK(flat[2] == 0.0);

  // all mass on one bin: (65536-256)^2/256 + 255*256
  auto black = chi_square(constant_image(256, 256, 0, 0, 0));
  for (int c = 0; c < 3; ++c) {
    CHECK(black[c] == doctest::Approx(16711680.0).epsilon(1e-12));
  }
}

TEST_CASE("correlation closed forms") {
  RgbImage board = checkerboard(16, 16);
  CHECK(correlation(board, Direction::Horizontal).mean ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(correlation(board, Direction::Vertical).mean ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(correlation(board, Direction::Diagonal).mean ==
        doctest::Approx(1.0).epsilon(1e-12));

  // identical rows make every vertical pair equal-valued
  RgbImage rows{8, 4, std::vector<std::uint8_t>(8 * 4 * 3)};
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t j = 0; j < 8; ++j) {
      std::size_t off = (static_cast<std::size_t>(i) * 8 + j) * 3;
      rows.pixels[off] = static_cast<std::uint8_t>(j * 30);
      rows.pixels[off + 1] = static_cast<std::uint8_t>(j * 30);
      rows.pixels[off + 2] = static_cast<std::uint8_t>(j * 30);
    }
  }
  CHECK(correlation(rows, Direction::Vertical).mean ==
        doctest::Approx(1.0).epsilon(1e-12));

  SUBCASE("degenerate inputs") {
    CHECK_THROWS_AS(correlation(constant_image(4, 4, 9, 9, 9),
                                Direction::Horizontal),
                    std::domain_error);
    RgbImage single{1, 1, {1, 2, 3}};
    CHECK_THROWS_AS(correlation(single, Direction::Horizontal),
                    std::invalid_argument);
    RgbImage column{1, 4, std::vector<std::uint8_t>(12, 0)};
    CHECK_THROWS_AS(correlation(column, Direction::Horizontal),
                    std::invalid_argument);
  }
  SUBCASE("bounded on arbitrary images") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      RgbImage img = testutil::random_image(rng, 9, 9);
      for (Direction dir : {Direction::Horizontal, Direction::Vertical,
                            Direction::Diagonal}) {
        CorrelationResult r = correlation(img, dir);
        for (int c = 0; c < 3; ++c) {
          REQUIRE(r.channel[c] >= -1.0 - 1e-12);
          REQUIRE(r.channel[c] <= 1.0 + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("entropy closed forms") {
  auto flat = entropy(uniform_image());
  CHECK(flat[0] == 8.0);
  CHECK(flat[1] == 8.0);
  CHECK(flat[2] == 8.0);

  auto constant = entropy(constant_image(16, 16, 42, 42, 42));
  CHECK(constant[0] == 0.0);
  CHECK(constant[1] == 0.0);
  CHECK(constant[2] == 0.0);

  // two equiprobable symbols carry exactly one bit
  RgbImage two{2, 1, {0, 0, 0, 255, 255, 255}};
  auto bits = entropy(two);
  CHECK(bits[0] == 1.0);
  CHECK(bits[1] == 1.0);
  CHECK(bits[2] == 1.0);

  // uniformity seen identically by entropy and chi-square
  CHECK(chi_square(uniform_image())[0] == 0.0);
}

TEST_CASE("npcr and uaci") {
  RgbImage a = constant_image(8, 8, 10, 20, 30);

  SUBCASE("identical images score zero") {
    auto n = npcr(a, a);
    auto u = uaci(a, a);
    for (int c = 0; c < 3; ++c) {
      CHECK(n[c] == 0.0);
      CHECK(u[c] == 0.0);
    }
  }
  SUBCASE("everywhere-different extremes") {
    RgbImage zeros = constant_image(8, 8, 0, 0, 0);
    RgbImage full = constant_image(8, 8, 255, 255, 255);
    auto n = npcr(zeros, full);
    auto u = uaci(zeros, full);
    for (int c = 0; c < 3; ++c) {
      CHECK(n[c] == 100.0);
      CHECK(u[c] == 100.0);
    }
  }
  SUBCASE("single changed pixel") {
    RgbImage b = a;
    b.pixels[0] = 11;
    auto n = npcr(a, b);
    CHECK(n[0] == doctest::Approx(100.0 / 64.0).epsilon(1e-12));
    CHECK(n[1] == 0.0);
    auto u = uaci(a, b);
    CHECK(u[0] == doctest::Approx(100.0 / (255.0 * 64.0)).epsilon(1e-12));
    CHECK(u[1] == 0.0);
  }
  SUBCASE("symmetry") {
    std::mt19937_64 rng(62);
    RgbImage x = testutil::random_image(rng, 6, 6);
    RgbImage y = testutil::random_image(rng, 6, 6);
    CHECK(npcr(x, y) == npcr(y, x));
    CHECK(uaci(x, y) == uaci(y, x));
  }
  SUBCASE("dimension mismatch throws") {
    RgbImage b = constant_image(8, 9, 0, 0, 0);
    CHECK_THROWS_AS(npcr(a, b), std::invalid_argument);
    CHECK_THROWS_AS(uaci(a, b), std::invalid_argument);
  }
  SUBCASE("random uniform pairs sit near the theoretical values") {
    std::mt19937_64 rng(63);
    RgbImage x = testutil::random_image(rng, 256, 256);
    RgbImage y = testutil::random_image(rng, 256, 256);
    auto n = npcr(x, y);
    auto u = uaci(x, y);
    for (int c = 0; c < 3; ++c) {
      CHECK(n[c] == doctest::Approx(99.609375).epsilon(0.0015));
      CHECK(u[c] == doctest::Approx(33.46).epsilon(0.0045));
    }
  }
}
