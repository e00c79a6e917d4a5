// Keystream arithmetic. Everything here must stay on plain IEEE double
// +,-,*,/ with abs and floor only, in fixed source order, so that
// ciphertexts are bit-identical across platforms. No transcendental calls.

#include "mpcs/chaos.hpp"

#include <cmath>
#include <stdexcept>

#include "mpcs/errors.hpp"

namespace mpcs {

namespace {

constexpr double kGuard = 1e10;

struct Deriv {
  double x, y, z;
};

inline Deriv lorenz_deriv(const LorenzParams& p, const SystemState& s) {
  return {p.sigma * (s.y - s.x), s.x * (p.rho - s.z) - s.y,
          s.x * s.y - p.beta * s.z};
}

inline Deriv chua_deriv(const ChuaParams& p, const SystemState& s) {
  double fx = p.m1 * s.x +
              0.5 * (p.m0 - p.m1) *
                  (std::fabs(s.x + 1.0) - std::fabs(s.x - 1.0));
  return {p.alpha * (s.y - s.x - fx), s.x - s.y + s.z, -p.beta * s.y};
}

inline Deriv rossler_deriv(const RosslerParams& p, const SystemState& s) {
  return {-s.y - s.z, s.x + p.a * s.y, p.b + s.z * (s.x - p.c)};
}

template <typename P, Deriv (*F)(const P&, const SystemState&)>
SystemState rk4_step(const P& p, const SystemState& s, double h) {
  double hh = 0.5 * h;
  Deriv k1 = F(p, s);
  SystemState s2{s.x + hh * k1.x, s.y + hh * k1.y, s.z + hh * k1.z};
  Deriv k2 = F(p, s2);
  SystemState s3{s.x + hh * k2.x, s.y + hh * k2.y, s.z + hh * k2.z};
  Deriv k3 = F(p, s3);
  SystemState s4{s.x + h * k3.x, s.y + h * k3.y, s.z + h * k3.z};
  Deriv k4 = F(p, s4);
  double sixth = h / 6.0;
  return {s.x + sixth * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          s.y + sixth * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
          s.z + sixth * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z)};
}

inline SystemState henon_step(const HenonParams& p, const SystemState& s) {
  return {p.a - s.y * s.y - p.b * s.z, s.x, s.y};
}

inline void check_guard(const SystemState& s) {
  if (!(std::fabs(s.x) <= kGuard) || !(std::fabs(s.y) <= kGuard) ||
      !(std::fabs(s.z) <= kGuard)) {
    throw DivergenceError("chaotic trajectory diverged");
  }
}

}  // namespace

SystemParams params_for(const KeyConfig& key, SystemId id) {
  switch (id) {
    case SystemId::Henon:
      return key.henon;
    case SystemId::Lorenz:
      return key.lorenz;
    case SystemId::Chua:
      return key.chua;
    default:
      return key.rossler;
  }
}

SystemState initial_state(const KeyConfig& key, SystemId id) {
  switch (id) {
    case SystemId::Henon:
      return key.henon0;
    case SystemId::Lorenz:
      return key.lorenz0;
    case SystemId::Chua:
      return key.chua0;
    default:
      return key.rossler0;
  }
}

SystemState step_system(SystemId id, const SystemParams& params,
                        const SystemState& state) {
  SystemState next;
  switch (id) {
    case SystemId::Henon:
      next = henon_step(std::get<HenonParams>(params), state);
      break;
    case SystemId::Lorenz: {
      const auto& p = std::get<LorenzParams>(params);
      next = rk4_step<LorenzParams, lorenz_deriv>(p, state, p.h);
      break;
    }
    case SystemId::Chua: {
      const auto& p = std::get<ChuaParams>(params);
      next = rk4_step<ChuaParams, chua_deriv>(p, state, p.h);
      break;
    }
    case SystemId::Rossler: {
      const auto& p = std::get<RosslerParams>(params);
      next = rk4_step<RosslerParams, rossler_deriv>(p, state, p.h);
      break;
    }
    default:
      throw std::invalid_argument("unknown system id");
  }
  check_guard(next);
  return next;
}

SystemState burn_in(SystemId id, const SystemParams& params, SystemState state,
                    std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) {
    state = step_system(id, params, state);
  }
  return state;
}

SequenceBundle generate_bundle(const KeyConfig& key, const TransientCounts& tc,
                               std::size_t length) {
  const std::uint32_t counts[4] = {tc.henon, tc.lorenz, tc.chua, tc.rossler};
  SequenceBundle bundle;
  bundle.length = length;
  for (int si = 0; si < 4; ++si) {
    SystemId id = static_cast<SystemId>(si);
    SystemParams params = params_for(key, id);
    SystemState s = burn_in(id, params, initial_state(key, id), counts[si]);
    for (int c = 0; c < 3; ++c) {
      bundle.raw[si][c].reserve(length);
      bundle.pre[si][c].reserve(length);
    }
    for (std::size_t k = 0; k < length; ++k) {
      s = step_system(id, params, s);
      bundle.raw[si][0].push_back(s.x);
      bundle.raw[si][1].push_back(s.y);
      bundle.raw[si][2].push_back(s.z);
      bundle.pre[si][0].push_back(preprocess(s.x));
      bundle.pre[si][1].push_back(preprocess(s.y));
      bundle.pre[si][2].push_back(preprocess(s.z));
    }
  }
  return bundle;
}

double preprocess(double value) {
  double scaled = value * 1e6;
  if (!std::isfinite(scaled)) {
    return 0.0;
  }
  double f = scaled - std::floor(scaled);
  // rounding in the subtraction can land exactly on 1.0
  if (f >= 1.0) {
    f = 0.0;
  }
  return f;
}

std::vector<std::uint8_t> binarize(const std::vector<double>& seq,
                                   double theta) {
  std::vector<std::uint8_t> bits(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    bits[i] = seq[i] >= theta ? 1 : 0;
  }
  return bits;
}

}  // namespace mpcs
