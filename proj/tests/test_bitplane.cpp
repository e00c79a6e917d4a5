#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "mpcs/bitplane.hpp"

using namespace mpcs;

namespace {

std::vector<std::uint8_t> row_of(const BitMatrix& bm, std::size_t r) {
  return {bm.bits.begin() + r * 24, bm.bits.begin() + (r + 1) * 24};
}

}  // namespace

TEST_CASE("image_to_bitmatrix lays out channel bits msb first") {
  RgbImage red{1, 1, {255, 0, 0}};
  BitMatrix bm = image_to_bitmatrix(red);
  CHECK(bm.rows == 1);
  CHECK(row_of(bm, 0) == std::vector<std::uint8_t>{1, 1, 1, 1, 1, 1, 1, 1,  //
                                                   0, 0, 0, 0, 0, 0, 0, 0,  //
                                                   0, 0, 0, 0, 0, 0, 0, 0});

  RgbImage px{1, 1, {1, 2, 3}};
  BitMatrix bm2 = image_to_bitmatrix(px);
  CHECK(row_of(bm2, 0) == std::vector<std::uint8_t>{0, 0, 0, 0, 0, 0, 0, 1,  //
                                                    0, 0, 0, 0, 0, 0, 1, 0,  //
                                                    0, 0, 0, 0, 0, 0, 1, 1});
}

TEST_CASE("bitmatrix round trip and dimension check") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t w = 1 + static_cast<std::uint32_t>(rng() % 9);
    std::uint32_t h = 1 + static_cast<std::uint32_t>(rng() % 9);
    RgbImage img = testutil::random_image(rng, w, h);
    RgbImage back = bitmatrix_to_image(image_to_bitmatrix(img), w, h);
    REQUIRE(back.pixels == img.pixels);
  }

  BitMatrix zeros;
  zeros.rows = 4;
  zeros.bits.assign(4 * 24, 0);
  RgbImage black = bitmatrix_to_image(zeros, 2, 2);
  CHECK(black.pixels == std::vector<std::uint8_t>(12, 0));

  CHECK_THROWS_AS(bitmatrix_to_image(zeros, 3, 2), std::invalid_argument);
}

TEST_CASE("popcount_delta") {
  RgbImage black{16, 16, std::vector<std::uint8_t>(16 * 16 * 3, 0)};
  CHECK(popcount_delta(image_to_bitmatrix(black)) == 0);

  RgbImage white{2, 2, std::vector<std::uint8_t>(12, 255)};
  CHECK(popcount_delta(image_to_bitmatrix(white)) == 96);

  RgbImage px{1, 1, {1, 2, 3}};
  CHECK(popcount_delta(image_to_bitmatrix(px)) == 4);
}

TEST_CASE("transient_counts") {
  TransientCounts zero = transient_counts(0);
  CHECK(zero.henon == 829);
  CHECK(zero.lorenz == 529);
  CHECK(zero.chua == 719);
  CHECK(zero.rossler == 1123);

  TransientCounts wrapped = transient_counts(997);
  CHECK(wrapped.henon == 829);
  CHECK(wrapped.lorenz == 589);
  CHECK(wrapped.chua == 1716);
  CHECK(wrapped.rossler == 1326);

  SUBCASE("ranges hold over the full delta span") {
    std::mt19937_64 rng(3);
    std::uint64_t max_delta = 24ull * 4096 * 4096;
    for (int i = 0; i < 200000; ++i) {
      std::uint64_t delta = rng() % (max_delta + 1);
      TransientCounts tc = transient_counts(delta);
      REQUIRE(tc.henon >= 829);
      REQUIRE(tc.henon <= 1825);
      REQUIRE(tc.lorenz >= 529);
      REQUIRE(tc.lorenz <= 1465);
      REQUIRE(tc.chua >= 719);
      REQUIRE(tc.chua <= 1815);
      REQUIRE(tc.rossler >= 1123);
      REQUIRE(tc.rossler <= 1519);
    }
  }
  SUBCASE("incrementing delta always moves at least one count") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10000; ++i) {
      std::uint64_t delta = rng() % (24ull * 4096 * 4096);
      TransientCounts a = transient_counts(delta);
      TransientCounts b = transient_counts(delta + 1);
      bool any_differ = a.henon != b.henon || a.lorenz != b.lorenz ||
                        a.chua != b.chua || a.rossler != b.rossler;
      REQUIRE(any_differ);
    }
  }
}

TEST_CASE("flipping one plaintext bit moves delta by one") {
  std::mt19937_64 rng(5);
  RgbImage img = testutil::random_image(rng, 8, 8);
  std::uint64_t base = popcount_delta(image_to_bitmatrix(img));
  for (int trial = 0; trial < 64; ++trial) {
    RgbImage flipped = img;
    std::size_t byte = rng() % flipped.pixels.size();
    int bit = static_cast<int>(rng() % 8);
    flipped.pixels[byte] =
        static_cast<std::uint8_t>(flipped.pixels[byte] ^ (1u << bit));
    std::uint64_t d = popcount_delta(image_to_bitmatrix(flipped));
    REQUIRE((d == base + 1 || d + 1 == base));
  }
}

TEST_CASE("arrange interleaves channel bits") {
  RgbImage red{1, 1, {255, 0, 0}};
  BitMatrix arranged = arrange(image_to_bitmatrix(red));
  std::vector<std::uint8_t> expect;
  for (int i = 0; i < 8; ++i) {
    expect.insert(expect.end(), {1, 0, 0});
  }
  CHECK(row_of(arranged, 0) == expect);

  BitMatrix ones;
  ones.rows = 2;
  ones.bits.assign(2 * 24, 1);
  CHECK(arrange(ones).bits == ones.bits);
}

TEST_CASE("arrange is a bijection preserving delta") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    RgbImage img = testutil::random_image(rng, 5, 3);
    BitMatrix bm = image_to_bitmatrix(img);
    BitMatrix fwd = arrange(bm);
    CHECK(popcount_delta(fwd) == popcount_delta(bm));
    CHECK(inverse_arrange(fwd).bits == bm.bits);
    CHECK(arrange(inverse_arrange(bm)).bits == bm.bits);
  }
}
