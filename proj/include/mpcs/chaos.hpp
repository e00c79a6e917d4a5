#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "mpcs/key.hpp"

namespace mpcs {

enum class SystemId { Henon = 0, Lorenz = 1, Chua = 2, Rossler = 3 };

using SystemParams =
    std::variant<HenonParams, LorenzParams, ChuaParams, RosslerParams>;

// burn-in iteration counts derived from the plaintext bit count
struct TransientCounts {
  std::uint32_t henon = 0;
  std::uint32_t lorenz = 0;
  std::uint32_t chua = 0;
  std::uint32_t rossler = 0;
};

// twelve raw trajectories and their preprocessed [0,1) forms,
// indexed [system][component] with components x=0, y=1, z=2
struct SequenceBundle {
  std::size_t length = 0;
  std::array<std::array<std::vector<double>, 3>, 4> raw;
  std::array<std::array<std::vector<double>, 3>, 4> pre;
};

SystemParams params_for(const KeyConfig& key, SystemId id);
SystemState initial_state(const KeyConfig& key, SystemId id);

// one map application (Henon) or one fixed-step RK4 step (the others);
// throws DivergenceError when a component passes 1e10 or goes non-finite,
// std::invalid_argument when params do not match id
SystemState step_system(SystemId id, const SystemParams& params,
                        const SystemState& state);

SystemState burn_in(SystemId id, const SystemParams& params, SystemState state,
                    std::uint64_t count);

// burn each system in, then record the next `length` states
SequenceBundle generate_bundle(const KeyConfig& key, const TransientCounts& tc,
                               std::size_t length);

// fractional part of value*1e6, in [0,1) for any finite input
double preprocess(double value);

std::vector<std::uint8_t> binarize(const std::vector<double>& seq, double theta);

}  // namespace mpcs
