#include "mpcs/diffusion.hpp"

#include <cmath>
#include <stdexcept>

namespace mpcs {

namespace {

void check_lengths(const ChannelStreams& s, const DiffusionKeys& keys) {
  if (s.r.size() != s.g.size() || s.r.size() != s.b.size() ||
      s.r.size() != keys.length) {
    throw std::invalid_argument("stream/key length mismatch");
  }
}

}  // namespace

DiffusionKeys extract_keys(const SequenceBundle& bundle) {
  DiffusionKeys keys;
  keys.length = bundle.length;
  int t = 0;
  for (int si = 0; si < 4; ++si) {
    for (int c = 0; c < 3; ++c) {
      const std::vector<double>& seq = bundle.pre[si][c];
      std::vector<std::uint8_t>& out = keys.keys[t++];
      out.resize(seq.size());
      for (std::size_t k = 0; k < seq.size(); ++k) {
        // seq[k] in [0,1), so the scaled value stays below 2^53
        out[k] = static_cast<std::uint8_t>(
            static_cast<std::uint64_t>(std::floor(seq[k] * 1e14)) & 255u);
      }
    }
  }
  return keys;
}

std::uint8_t key_lookup(const DiffusionKeys& keys, std::size_t j, int t) {
  if (t < 0 || t > 11) {
    throw std::out_of_range("key selector t out of range");
  }
  if (j >= keys.length) {
    throw std::out_of_range("key index out of range");
  }
  return keys.keys[t][j];
}

ChannelStreams diffuse(const ChannelStreams& s, const DiffusionKeys& keys,
                       const SeedBytes& seeds) {
  check_lengths(s, keys);
  std::size_t n = s.r.size();
  ChannelStreams c;
  c.r.resize(n);
  c.g.resize(n);
  c.b.resize(n);
  unsigned pr = seeds.r, pg = seeds.g, pb = seeds.b;
  for (std::size_t j = 0; j < n; ++j) {
    int t1 = static_cast<int>(pb % 12);
    int t2 = static_cast<int>(pr % 12);
    int t3 = static_cast<int>(pg % 12);
    c.r[j] = static_cast<std::uint8_t>(s.r[j] ^ ((pr + keys.keys[t1][j]) & 255u));
    c.g[j] = static_cast<std::uint8_t>(s.g[j] ^ ((pg + keys.keys[t2][j]) & 255u));
    c.b[j] = static_cast<std::uint8_t>(s.b[j] ^ ((pb + keys.keys[t3][j]) & 255u));
    pr = c.r[j];
    pg = c.g[j];
    pb = c.b[j];
  }
  return c;
}

ChannelStreams inverse_diffuse(const ChannelStreams& c,
                               const DiffusionKeys& keys,
                               const SeedBytes& seeds) {
  check_lengths(c, keys);
  std::size_t n = c.r.size();
  ChannelStreams s;
  s.r.resize(n);
  s.g.resize(n);
  s.b.resize(n);
  unsigned pr = seeds.r, pg = seeds.g, pb = seeds.b;
  for (std::size_t j = 0; j < n; ++j) {
    int t1 = static_cast<int>(pb % 12);
    int t2 = static_cast<int>(pr % 12);
    int t3 = static_cast<int>(pg % 12);
    s.r[j] = static_cast<std::uint8_t>(c.r[j] ^ ((pr + keys.keys[t1][j]) & 255u));
    s.g[j] = static_cast<std::uint8_t>(c.g[j] ^ ((pg + keys.keys[t2][j]) & 255u));
    s.b[j] = static_cast<std::uint8_t>(c.b[j] ^ ((pb + keys.keys[t3][j]) & 255u));
    pr = c.r[j];
    pg = c.g[j];
    pb = c.b[j];
  }
  return s;
}

}  // namespace mpcs
