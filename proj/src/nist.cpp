// NIST SP 800-22 subset used by the Table-1 battery. Parameter choices
// (block lengths, regimes, class probabilities) follow the publication
// and the sts reference code.

#include "mpcs/nist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "mpcs/special.hpp"

namespace mpcs {

namespace {

void require_length(const std::vector<std::uint8_t>& bits, std::size_t min,
                    const char* test) {
  if (bits.size() < min) {
    throw std::invalid_argument(std::string(test) + " needs at least " +
                                std::to_string(min) + " bits");
  }
}

double phi(double x) {
  return 0.5 * mpcs::erfc(-x / std::sqrt(2.0));
}

// C-style truncation, as the sts code relies on
std::int64_t cdiv(std::int64_t a, std::int64_t b) {
  return a / b;
}

TestVerdict make_verdict(const char* name, double p,
                         std::vector<std::pair<std::string, double>> stats) {
  TestVerdict v;
  v.name = name;
  v.p_value = p;
  v.pass = p >= 0.01;
  v.stats = std::move(stats);
  return v;
}

// ---- fft ------------------------------------------------------------------

using cd = std::complex<double>;

void fft_pow2(std::vector<cd>& a, bool inverse) {
  std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) {
      j ^= bit;
    }
    j ^= bit;
    if (i < j) {
      std::swap(a[i], a[j]);
    }
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
    if (!inverse) {
      ang = -ang;
    }
    cd wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        cd u = a[i + j];
        cd v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    for (cd& x : a) {
      x /= static_cast<double>(n);
    }
  }
}

// chirp factor e^{sign * i * pi * j^2 / n}, j^2 reduced mod 2n to keep the
// sine argument small
cd chirp(std::uint64_t j, std::uint64_t n, double sign) {
  std::uint64_t t = (j * j) % (2 * n);
  double ang = sign * std::numbers::pi * static_cast<double>(t) /
               static_cast<double>(n);
  return {std::cos(ang), std::sin(ang)};
}

std::vector<cd> dft_bluestein(const std::vector<double>& x) {
  std::size_t n = x.size();
  std::size_t m = 1;
  while (m < 2 * n - 1) {
    m <<= 1;
  }
  std::vector<cd> a(m, cd{0.0, 0.0});
  std::vector<cd> b(m, cd{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = x[j] * chirp(j, n, -1.0);
    cd bj = chirp(j, n, 1.0);
    b[j] = bj;
    if (j > 0) {
      b[m - j] = bj;
    }
  }
  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] *= b[i];
  }
  fft_pow2(a, true);
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = a[k] * chirp(k, n, -1.0);
  }
  return out;
}

// ---- rank -----------------------------------------------------------------

double rank_prob(int r, int m, int q) {
  double product = 1.0;
  for (int i = 0; i < r; ++i) {
    product *= (1.0 - std::pow(2.0, i - m)) * (1.0 - std::pow(2.0, i - q)) /
               (1.0 - std::pow(2.0, i - r));
  }
  return std::pow(2.0, static_cast<double>(r) * (m + q - r) -
                           static_cast<double>(m) * q) *
         product;
}

}  // namespace

std::size_t berlekamp_massey(const std::vector<std::uint8_t>& block) {
  std::size_t n = block.size();
  std::vector<std::uint8_t> c(n, 0), b(n, 0);
  c[0] = 1;
  b[0] = 1;
  std::size_t L = 0;
  std::ptrdiff_t m = -1;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t d = block[i];
    for (std::size_t j = 1; j <= L; ++j) {
      d ^= c[j] & block[i - j];
    }
    if (d) {
      std::vector<std::uint8_t> t = c;
      std::size_t shift = i - static_cast<std::size_t>(m);
      for (std::size_t j = 0; j + shift < n; ++j) {
        c[j + shift] ^= b[j];
      }
      if (L <= i / 2) {
        L = i + 1 - L;
        m = static_cast<std::ptrdiff_t>(i);
        b = std::move(t);
      }
    }
  }
  return L;
}

int binary_matrix_rank(const std::uint32_t rows_in[32]) {
  std::uint32_t rows[32];
  std::copy(rows_in, rows_in + 32, rows);
  int rank = 0;
  for (int col = 0; col < 32 && rank < 32; ++col) {
    std::uint32_t mask = 1u << (31 - col);
    int pivot = -1;
    for (int r = rank; r < 32; ++r) {
      if (rows[r] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < 32; ++r) {
      if (r != rank && (rows[r] & mask)) {
        rows[r] ^= rows[rank];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<double> spectral_magnitudes(const std::vector<double>& signal) {
  std::size_t n = signal.size();
  std::vector<cd> spectrum;
  if ((n & (n - 1)) == 0 && n > 0) {
    std::vector<cd> a(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = cd{signal[i], 0.0};
    }
    fft_pow2(a, false);
    spectrum = std::move(a);
  } else {
    spectrum = dft_bluestein(signal);
  }
  std::vector<double> mags(n / 2);
  for (std::size_t i = 0; i < n / 2; ++i) {
    mags[i] = std::abs(spectrum[i]);
  }
  return mags;
}

TestVerdict frequency_test(const std::vector<std::uint8_t>& bits) {
  require_length(bits, 100, "frequency test");
  std::int64_t s = 0;
  for (std::uint8_t b : bits) {
    s += 2 * static_cast<std::int64_t>(b) - 1;
  }
  double n = static_cast<double>(bits.size());
  double p = mpcs::erfc(std::fabs(static_cast<double>(s)) /
                        std::sqrt(2.0 * n));
  return make_verdict("frequency", p, {{"s_n", static_cast<double>(s)}});
}

TestVerdict block_frequency_test(const std::vector<std::uint8_t>& bits,
                                 std::size_t block_len) {
  require_length(bits, block_len, "block frequency test");
  std::size_t N = bits.size() / block_len;
  double chi2 = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < block_len; ++j) {
      ones += bits[i * block_len + j];
    }
    double pi = static_cast<double>(ones) / static_cast<double>(block_len);
    chi2 += (pi - 0.5) * (pi - 0.5);
  }
  chi2 *= 4.0 * static_cast<double>(block_len);
  double p = igamc(static_cast<double>(N) / 2.0, chi2 / 2.0);
  return make_verdict("block-frequency", p,
                      {{"chi2", chi2}, {"blocks", static_cast<double>(N)}});
}

TestVerdict cusum_test(const std::vector<std::uint8_t>& bits, bool reverse) {
  require_length(bits, 100, "cusum test");
  std::int64_t n = static_cast<std::int64_t>(bits.size());
  std::int64_t sum = 0;
  std::int64_t z = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint8_t b = reverse ? bits[static_cast<std::size_t>(n - 1 - i)]
                             : bits[static_cast<std::size_t>(i)];
    sum += 2 * static_cast<std::int64_t>(b) - 1;
    z = std::max(z, sum < 0 ? -sum : sum);
  }
  const char* name = reverse ? "cusum-reverse" : "cusum-forward";
  if (z == 0) {
    return make_verdict(name, 0.0, {{"z", 0.0}});
  }
  double sq = std::sqrt(static_cast<double>(n));
  double zd = static_cast<double>(z);
  double total = 0.0;
  for (std::int64_t k = cdiv(cdiv(-n, z) + 1, 4); k <= cdiv(cdiv(n, z) - 1, 4);
       ++k) {
    double kd = static_cast<double>(k);
    total += phi((4.0 * kd + 1.0) * zd / sq) - phi((4.0 * kd - 1.0) * zd / sq);
  }
  double p = 1.0 - total;
  total = 0.0;
  for (std::int64_t k = cdiv(cdiv(-n, z) - 3, 4); k <= cdiv(cdiv(n, z) - 1, 4);
       ++k) {
    double kd = static_cast<double>(k);
    total += phi((4.0 * kd + 3.0) * zd / sq) - phi((4.0 * kd + 1.0) * zd / sq);
  }
  p += total;
  return make_verdict(name, p, {{"z", zd}});
}

TestVerdict runs_test(const std::vector<std::uint8_t>& bits) {
  require_length(bits, 100, "runs test");
  std::size_t n = bits.size();
  std::size_t ones = 0;
  for (std::uint8_t b : bits) {
    ones += b;
  }
  double nd = static_cast<double>(n);
  double pi = static_cast<double>(ones) / nd;
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(nd)) {
    // frequency pre-test failed; the runs statistic is not meaningful
    return make_verdict("runs", 0.0, {{"pi", pi}});
  }
  std::size_t v = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v += bits[i] != bits[i + 1];
  }
  double vd = static_cast<double>(v);
  double num = std::fabs(vd - 2.0 * nd * pi * (1.0 - pi));
  double den = 2.0 * std::sqrt(2.0 * nd) * pi * (1.0 - pi);
  double p = mpcs::erfc(num / den);
  return make_verdict("runs", p, {{"v_obs", vd}, {"pi", pi}});
}

TestVerdict longest_runs_test(const std::vector<std::uint8_t>& bits) {
  require_length(bits, 128, "longest runs test");
  std::size_t n = bits.size();
  std::size_t M;
  int K;
  std::vector<int> classes;
  std::vector<double> piv;
  if (n < 6272) {
    M = 8;
    K = 3;
    classes = {1, 2, 3};
    piv = {0.21484375, 0.3671875, 0.23046875, 0.1875};
  } else if (n < 750000) {
    M = 128;
    K = 5;
    classes = {4, 5, 6, 7, 8};
    piv = {0.1174035788, 0.242955959, 0.249363483,
           0.17517706,   0.102701071, 0.112398847};
  } else {
    M = 10000;
    K = 6;
    classes = {10, 11, 12, 13, 14, 15};
    piv = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }
  std::size_t N = n / M;
  std::vector<std::size_t> nu(static_cast<std::size_t>(K) + 1, 0);
  for (std::size_t i = 0; i < N; ++i) {
    int longest = 0, run = 0;
    for (std::size_t j = 0; j < M; ++j) {
      run = bits[i * M + j] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    std::size_t idx = static_cast<std::size_t>(K);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      if (longest <= classes[ci]) {
        idx = ci;
        break;
      }
    }
    ++nu[idx];
  }
  double chi2 = 0.0;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(K); ++i) {
    double expect = static_cast<double>(N) * piv[i];
    double d = static_cast<double>(nu[i]) - expect;
    chi2 += d * d / expect;
  }
  double p = igamc(static_cast<double>(K) / 2.0, chi2 / 2.0);
  return make_verdict("longest-runs", p,
                      {{"chi2", chi2}, {"blocks", static_cast<double>(N)}});
}

TestVerdict rank_test(const std::vector<std::uint8_t>& bits) {
  require_length(bits, 38 * 1024, "rank test");
  std::size_t N = bits.size() / 1024;
  double p32 = rank_prob(32, 32, 32);
  double p31 = rank_prob(31, 32, 32);
  double p30 = 1.0 - p32 - p31;
  std::size_t f32 = 0, f31 = 0;
  for (std::size_t i = 0; i < N; ++i) {
    std::uint32_t rows[32];
    for (int r = 0; r < 32; ++r) {
      std::uint32_t row = 0;
      for (int c = 0; c < 32; ++c) {
        row = (row << 1) |
              bits[i * 1024 + static_cast<std::size_t>(r) * 32 +
                   static_cast<std::size_t>(c)];
      }
      rows[r] = row;
    }
    int rank = binary_matrix_rank(rows);
    if (rank == 32) {
      ++f32;
    } else if (rank == 31) {
      ++f31;
    }
  }
  double Nd = static_cast<double>(N);
  double f30 = Nd - static_cast<double>(f32) - static_cast<double>(f31);
  auto term = [Nd](double observed, double prob) {
    double d = observed - prob * Nd;
    return d * d / (prob * Nd);
  };
  double chi2 = term(static_cast<double>(f32), p32) +
                term(static_cast<double>(f31), p31) + term(f30, p30);
  double p = std::exp(-chi2 / 2.0);
  return make_verdict("rank", p,
                      {{"chi2", chi2},
                       {"f32", static_cast<double>(f32)},
                       {"f31", static_cast<double>(f31)}});
}

TestVerdict fft_test(const std::vector<std::uint8_t>& bits) {
  require_length(bits, 100, "fft test");
  std::size_t n = bits.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 2.0 * bits[i] - 1.0;
  }
  std::vector<double> mags = spectral_magnitudes(x);
  double T = std::sqrt(2.995732274 * static_cast<double>(n));
  double n0 = 0.95 * static_cast<double>(n) / 2.0;
  std::size_t n1 = 0;
  for (double m : mags) {
    n1 += m < T;
  }
  double d = (static_cast<double>(n1) - n0) /
             std::sqrt(static_cast<double>(n) * 0.95 * 0.05 / 4.0);
  double p = mpcs::erfc(std::fabs(d) / std::sqrt(2.0));
  return make_verdict(
      "fft", p,
      {{"n1", static_cast<double>(n1)}, {"threshold", T}, {"d", d}});
}

TestVerdict linear_complexity_test(const std::vector<std::uint8_t>& bits,
                                   std::size_t block_len) {
  require_length(bits, block_len, "linear complexity test");
  std::size_t M = block_len;
  std::size_t N = bits.size() / M;
  constexpr int K = 6;
  const double piv[7] = {0.010417, 0.03125, 0.125,    0.5,
                         0.25,     0.0625,  0.020833};
  double Md = static_cast<double>(M);
  double sign = (M % 2 == 0) ? 1.0 : -1.0;
  double mu = Md / 2.0 + (9.0 - sign) / 36.0 -
              (Md / 3.0 + 2.0 / 9.0) / std::pow(2.0, Md);
  std::size_t nu[7] = {0, 0, 0, 0, 0, 0, 0};
  std::vector<std::uint8_t> block(M);
  for (std::size_t i = 0; i < N; ++i) {
    std::copy(bits.begin() + static_cast<std::ptrdiff_t>(i * M),
              bits.begin() + static_cast<std::ptrdiff_t>((i + 1) * M),
              block.begin());
    double L = static_cast<double>(berlekamp_massey(block));
    double T = sign * (L - mu) + 2.0 / 9.0;
    if (T <= -2.5) {
      ++nu[0];
    } else if (T <= -1.5) {
      ++nu[1];
    } else if (T <= -0.5) {
      ++nu[2];
    } else if (T <= 0.5) {
      ++nu[3];
    } else if (T <= 1.5) {
      ++nu[4];
    } else if (T <= 2.5) {
      ++nu[5];
    } else {
      ++nu[6];
    }
  }
  double chi2 = 0.0;
  for (int i = 0; i < 7; ++i) {
    double expect = static_cast<double>(N) * piv[i];
    double d = static_cast<double>(nu[i]) - expect;
    chi2 += d * d / expect;
  }
  double p = igamc(K / 2.0, chi2 / 2.0);
  return make_verdict("linear-complexity", p,
                      {{"chi2", chi2}, {"blocks", static_cast<double>(N)}});
}

namespace {

double psi_sq(const std::vector<std::uint8_t>& bits, int m) {
  if (m <= 0) {
    return 0.0;
  }
  std::size_t n = bits.size();
  std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t idx = 0;
    for (int t = 0; t < m; ++t) {
      idx = (idx << 1) | bits[(j + static_cast<std::size_t>(t)) % n];
    }
    ++counts[idx];
  }
  double ssum = 0.0;
  for (std::uint64_t c : counts) {
    ssum += static_cast<double>(c) * static_cast<double>(c);
  }
  return std::pow(2.0, m) / static_cast<double>(n) * ssum -
         static_cast<double>(n);
}

}  // namespace

TestVerdict serial_test(const std::vector<std::uint8_t>& bits, int m) {
  require_length(bits, 100, "serial test");
  if (m < 2) {
    throw std::invalid_argument("serial test needs m >= 2");
  }
  double psi2 = psi_sq(bits, m);
  double psi1 = psi_sq(bits, m - 1);
  double psi0 = psi_sq(bits, m - 2);
  double d1 = psi2 - psi1;
  double d2 = psi2 - 2.0 * psi1 + psi0;
  // the deltas are non-negative by construction; clip rounding dust
  d1 = std::max(d1, 0.0);
  d2 = std::max(d2, 0.0);
  double p1 = igamc(std::pow(2.0, m - 2), d1 / 2.0);
  double p2 = igamc(std::pow(2.0, m - 3), d2 / 2.0);
  double p = std::min(p1, p2);
  TestVerdict v = make_verdict(
      "serial", p, {{"p1", p1}, {"p2", p2}, {"del1", d1}, {"del2", d2}});
  return v;
}

BatteryReport battery(const std::vector<std::uint8_t>& bits) {
  BatteryReport report;
  const char* names[10] = {"frequency",    "block-frequency",
                           "cusum-forward", "cusum-reverse",
                           "runs",          "longest-runs",
                           "rank",          "fft",
                           "linear-complexity", "serial"};
  auto run = [&bits](int row) -> TestVerdict {
    switch (row) {
      case 0:
        return frequency_test(bits);
      case 1:
        return block_frequency_test(bits);
      case 2:
        return cusum_test(bits, false);
      case 3:
        return cusum_test(bits, true);
      case 4:
        return runs_test(bits);
      case 5:
        return longest_runs_test(bits);
      case 6:
        return rank_test(bits);
      case 7:
        return fft_test(bits);
      case 8:
        return linear_complexity_test(bits);
      default:
        return serial_test(bits);
    }
  };
  for (int row = 0; row < 10; ++row) {
    try {
      report.verdicts.push_back(run(row));
    } catch (const std::invalid_argument& e) {
      TestVerdict v;
      v.name = names[row];
      v.skipped = true;
      v.note = e.what();
      report.verdicts.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace mpcs
