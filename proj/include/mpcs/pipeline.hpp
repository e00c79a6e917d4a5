#pragma once

#include <cstdint>
#include <vector>

#include "mpcs/bitplane.hpp"
#include "mpcs/key.hpp"

namespace mpcs {

// serialized form: "MPCS" magic, version byte 0x01, u32 width, u32 height,
// u64 delta (all big-endian), then payload R||G||B of mn bytes each
struct CipherContainer {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint64_t delta = 0;
  std::vector<std::uint8_t> payload;
};

inline constexpr std::size_t kContainerHeaderSize = 21;

CipherContainer encrypt(const RgbImage& img, const KeyConfig& key);
RgbImage decrypt(const CipherContainer& ct, const KeyConfig& key);

std::vector<std::uint8_t> serialize(const CipherContainer& ct);
CipherContainer parse_container(const std::vector<std::uint8_t>& bytes);

}  // namespace mpcs
