#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mpcs {

struct TestVerdict {
  std::string name;
  double p_value = 0.0;
  bool pass = false;     // p_value >= 0.01, meaningless when skipped
  bool skipped = false;  // sequence too short for the test
  std::string note;      // skip reason
  std::vector<std::pair<std::string, double>> stats;
};

// ten verdicts in fixed row order: frequency, block-frequency,
// cusum-forward, cusum-reverse, runs, longest-runs, rank, fft,
// linear-complexity, serial
struct BatteryReport {
  std::vector<TestVerdict> verdicts;
};

// individual tests throw std::invalid_argument when the sequence is too
// short; battery() turns that into a skipped verdict
TestVerdict frequency_test(const std::vector<std::uint8_t>& bits);
TestVerdict block_frequency_test(const std::vector<std::uint8_t>& bits,
                                 std::size_t block_len = 128);
TestVerdict cusum_test(const std::vector<std::uint8_t>& bits, bool reverse);
TestVerdict runs_test(const std::vector<std::uint8_t>& bits);
TestVerdict longest_runs_test(const std::vector<std::uint8_t>& bits);
TestVerdict rank_test(const std::vector<std::uint8_t>& bits);
TestVerdict fft_test(const std::vector<std::uint8_t>& bits);
TestVerdict linear_complexity_test(const std::vector<std::uint8_t>& bits,
                                   std::size_t block_len = 500);
TestVerdict serial_test(const std::vector<std::uint8_t>& bits, int m = 2);

BatteryReport battery(const std::vector<std::uint8_t>& bits);

// building blocks exposed for direct verification
std::size_t berlekamp_massey(const std::vector<std::uint8_t>& block);
int binary_matrix_rank(const std::uint32_t rows[32]);
// |DFT| for bins 0..n/2-1 of a real signal; handles any length
std::vector<double> spectral_magnitudes(const std::vector<double>& signal);

}  // namespace mpcs
