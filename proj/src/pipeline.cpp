#include "mpcs/pipeline.hpp"

#include <stdexcept>

#include "mpcs/chaos.hpp"
#include "mpcs/diffusion.hpp"
#include "mpcs/errors.hpp"
#include "mpcs/shuffle.hpp"

namespace mpcs {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | p[3];
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v = (v << 8) | p[i];
  }
  return v;
}

void validate_image(const RgbImage& img) {
  if (img.width == 0 || img.height == 0) {
    throw std::invalid_argument("empty image");
  }
  std::size_t mn = img.pixel_count();
  if (mn > 0xFFFFFFFFull) {
    throw std::invalid_argument("image too large");
  }
  if (img.pixels.size() != mn * 3) {
    throw std::invalid_argument("pixel buffer size mismatch");
  }
}

}  // namespace

CipherContainer encrypt(const RgbImage& img, const KeyConfig& key) {
  validate_image(img);
  std::size_t mn = img.pixel_count();

  BitMatrix zeta = image_to_bitmatrix(img);
  std::uint64_t delta = popcount_delta(zeta);
  TransientCounts tc = transient_counts(delta);

  BitMatrix psi = arrange(zeta);
  SequenceBundle bundle = generate_bundle(key, tc, mn);
  PermutationSet ps = make_permutation_set(bundle);
  BitMatrix psi_e = column_shuffle(psi, ps);
  BitMatrix psi_s = row_pair_shuffle(psi_e, bundle);
  RgbImage shuffled = bitmatrix_to_image(psi_s, img.width, img.height);

  ChannelStreams s;
  s.r.resize(mn);
  s.g.resize(mn);
  s.b.resize(mn);
  for (std::size_t p = 0; p < mn; ++p) {
    s.r[p] = shuffled.pixels[p * 3];
    s.g[p] = shuffled.pixels[p * 3 + 1];
    s.b[p] = shuffled.pixels[p * 3 + 2];
  }

  DiffusionKeys keys = extract_keys(bundle);
  ChannelStreams c = diffuse(s, keys, key.seeds);

  CipherContainer ct;
  ct.width = img.width;
  ct.height = img.height;
  ct.delta = delta;
  ct.payload.reserve(mn * 3);
  ct.payload.insert(ct.payload.end(), c.r.begin(), c.r.end());
  ct.payload.insert(ct.payload.end(), c.g.begin(), c.g.end());
  ct.payload.insert(ct.payload.end(), c.b.begin(), c.b.end());
  return ct;
}

RgbImage decrypt(const CipherContainer& ct, const KeyConfig& key) {
  std::size_t mn = static_cast<std::size_t>(ct.width) * ct.height;
  if (ct.width == 0 || ct.height == 0 || ct.payload.size() != mn * 3) {
    throw FormatError("malformed cipher container");
  }
  if (ct.delta > 24 * static_cast<std::uint64_t>(mn)) {
    throw FormatError("delta out of range for image size");
  }

  TransientCounts tc = transient_counts(ct.delta);
  SequenceBundle bundle = generate_bundle(key, tc, mn);
  DiffusionKeys keys = extract_keys(bundle);

  ChannelStreams c;
  c.r.assign(ct.payload.begin(), ct.payload.begin() + mn);
  c.g.assign(ct.payload.begin() + mn, ct.payload.begin() + 2 * mn);
  c.b.assign(ct.payload.begin() + 2 * mn, ct.payload.end());
  ChannelStreams s = inverse_diffuse(c, keys, key.seeds);

  RgbImage shuffled;
  shuffled.width = ct.width;
  shuffled.height = ct.height;
  shuffled.pixels.resize(mn * 3);
  for (std::size_t p = 0; p < mn; ++p) {
    shuffled.pixels[p * 3] = s.r[p];
    shuffled.pixels[p * 3 + 1] = s.g[p];
    shuffled.pixels[p * 3 + 2] = s.b[p];
  }

  BitMatrix psi_s = image_to_bitmatrix(shuffled);
  PermutationSet ps = make_permutation_set(bundle);
  BitMatrix psi_e = inverse_row_pair_shuffle(psi_s, bundle);
  BitMatrix psi = inverse_column_shuffle(psi_e, ps);
  BitMatrix zeta = inverse_arrange(psi);
  return bitmatrix_to_image(zeta, ct.width, ct.height);
}

std::vector<std::uint8_t> serialize(const CipherContainer& ct) {
  std::vector<std::uint8_t> out;
  out.reserve(kContainerHeaderSize + ct.payload.size());
  out.push_back('M');
  out.push_back('P');
  out.push_back('C');
  out.push_back('S');
  out.push_back(0x01);
  put_u32(out, ct.width);
  put_u32(out, ct.height);
  put_u64(out, ct.delta);
  out.insert(out.end(), ct.payload.begin(), ct.payload.end());
  return out;
}

CipherContainer parse_container(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kContainerHeaderSize) {
    throw FormatError("container too short");
  }
  if (bytes[0] != 'M' || bytes[1] != 'P' || bytes[2] != 'C' ||
      bytes[3] != 'S') {
    throw FormatError("bad container magic");
  }
  if (bytes[4] != 0x01) {
    throw FormatError("unsupported container version");
  }
  CipherContainer ct;
  ct.width = get_u32(&bytes[5]);
  ct.height = get_u32(&bytes[9]);
  ct.delta = get_u64(&bytes[13]);
  std::uint64_t mn = static_cast<std::uint64_t>(ct.width) * ct.height;
  if (mn == 0 || bytes.size() - kContainerHeaderSize != mn * 3) {
    throw FormatError("container payload length mismatch");
  }
  if (ct.delta > 24 * mn) {
    throw FormatError("container delta out of range");
  }
  ct.payload.assign(bytes.begin() + kContainerHeaderSize, bytes.end());
  return ct;
}

}  // namespace mpcs
