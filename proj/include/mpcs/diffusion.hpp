#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mpcs/chaos.hpp"
#include "mpcs/key.hpp"

namespace mpcs {

// byte key sequences in selector order t = 0..11:
// keyX1,keyY1,keyZ1,keyX2,keyY2,keyZ2,keyX3,keyY3,keyZ3,keyX4,keyY4,keyZ4
struct DiffusionKeys {
  std::size_t length = 0;
  std::array<std::vector<std::uint8_t>, 12> keys;
};

struct ChannelStreams {
  std::vector<std::uint8_t> r;
  std::vector<std::uint8_t> g;
  std::vector<std::uint8_t> b;
};

// key byte = floor(pre * 1e14) mod 256
DiffusionKeys extract_keys(const SequenceBundle& bundle);

// j is 0-based; throws std::out_of_range on bad j or t
std::uint8_t key_lookup(const DiffusionKeys& keys, std::size_t j, int t);

// cross-channel chained diffusion; selector of each channel comes from the
// previous cipher byte of another channel (B->R, R->G, G->B)
ChannelStreams diffuse(const ChannelStreams& s, const DiffusionKeys& keys,
                       const SeedBytes& seeds);
ChannelStreams inverse_diffuse(const ChannelStreams& c,
                               const DiffusionKeys& keys,
                               const SeedBytes& seeds);

}  // namespace mpcs
