#pragma once

#include <cstdint>
#include <string>

namespace mpcs {

struct HenonParams {
  double a = 1.76;
  double b = 0.1;
};

struct LorenzParams {
  double sigma = 10.0;
  double rho = 28.0;
  double beta = 8.0 / 3.0;
  double h = 0.01;
};

struct ChuaParams {
  double alpha = 10.0;
  double beta = 14.87;
  double m0 = -1.27;
  double m1 = -0.68;
  double h = 0.05;
};

struct RosslerParams {
  double a = 0.2;
  double b = 0.2;
  double c = 5.7;
  double h = 0.05;
};

struct SystemState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct SeedBytes {
  std::uint8_t r = 111;
  std::uint8_t g = 222;
  std::uint8_t b = 77;
};

// full secret key: system parameters, initial conditions, binarization
// threshold and the three diffusion seeds
struct KeyConfig {
  HenonParams henon;
  LorenzParams lorenz;
  ChuaParams chua;
  RosslerParams rossler;
  SystemState henon0{0.1, 0.2, 0.3};
  SystemState lorenz0{1.0, 1.0, 1.0};
  SystemState chua0{0.7, 0.0, 0.0};
  SystemState rossler0{1.0, 1.0, 1.0};
  double theta = 0.5;
  SeedBytes seeds;
};

// key=value text form, one scalar per line, 17 significant digits.
// parse_key rejects unknown, duplicate and missing keys; '#' starts a comment.
std::string format_key(const KeyConfig& key);
KeyConfig parse_key(const std::string& text);

KeyConfig load_key_file(const std::string& path);
void save_key_file(const std::string& path, const KeyConfig& key);

// perturbs the default initial conditions; deterministic for a fixed seed
KeyConfig generate_key(std::uint64_t seed);
// entropy-seeded variant
KeyConfig generate_key();

}  // namespace mpcs
