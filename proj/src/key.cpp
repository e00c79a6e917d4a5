#include "mpcs/key.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "mpcs/chaos.hpp"
#include "mpcs/errors.hpp"

namespace mpcs {

namespace {

using Getter = double (*)(const KeyConfig&);
using Setter = void (*)(KeyConfig&, double);

struct FieldDef {
  const char* name;
  Getter get;
  Setter set;
};

#define SCALAR_FIELD(label, expr)                              \
  {label, [](const KeyConfig& k) -> double { return expr; },  \
   [](KeyConfig& k, double v) { expr = v; }}

const FieldDef kFields[] = {
    SCALAR_FIELD("henon.a", k.henon.a),
    SCALAR_FIELD("henon.b", k.henon.b),
    SCALAR_FIELD("henon.x0", k.henon0.x),
    SCALAR_FIELD("henon.y0", k.henon0.y),
    SCALAR_FIELD("henon.z0", k.henon0.z),
    SCALAR_FIELD("lorenz.sigma", k.lorenz.sigma),
    SCALAR_FIELD("lorenz.rho", k.lorenz.rho),
    SCALAR_FIELD("lorenz.beta", k.lorenz.beta),
    SCALAR_FIELD("lorenz.h", k.lorenz.h),
    SCALAR_FIELD("lorenz.x0", k.lorenz0.x),
    SCALAR_FIELD("lorenz.y0", k.lorenz0.y),
    SCALAR_FIELD("lorenz.z0", k.lorenz0.z),
    SCALAR_FIELD("chua.alpha", k.chua.alpha),
    SCALAR_FIELD("chua.beta", k.chua.beta),
    SCALAR_FIELD("chua.m0", k.chua.m0),
    SCALAR_FIELD("chua.m1", k.chua.m1),
    SCALAR_FIELD("chua.h", k.chua.h),
    SCALAR_FIELD("chua.x0", k.chua0.x),
    SCALAR_FIELD("chua.y0", k.chua0.y),
    SCALAR_FIELD("chua.z0", k.chua0.z),
    SCALAR_FIELD("rossler.a", k.rossler.a),
    SCALAR_FIELD("rossler.b", k.rossler.b),
    SCALAR_FIELD("rossler.c", k.rossler.c),
    SCALAR_FIELD("rossler.h", k.rossler.h),
    SCALAR_FIELD("rossler.x0", k.rossler0.x),
    SCALAR_FIELD("rossler.y0", k.rossler0.y),
    SCALAR_FIELD("rossler.z0", k.rossler0.z),
    SCALAR_FIELD("theta", k.theta),
};

#undef SCALAR_FIELD

const char* kSeedNames[3] = {"seed.r", "seed.g", "seed.b"};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void validate(const KeyConfig& key) {
  for (const FieldDef& f : kFields) {
    if (!std::isfinite(f.get(key))) {
      throw FormatError(std::string("non-finite key value: ") + f.name);
    }
  }
  if (!(key.theta > 0.0 && key.theta < 1.0)) {
    throw FormatError("theta must lie in (0,1)");
  }
  if (key.lorenz.h <= 0.0 || key.chua.h <= 0.0 || key.rossler.h <= 0.0) {
    throw FormatError("integration step must be positive");
  }
}

}  // namespace

std::string format_key(const KeyConfig& key) {
  std::string out;
  for (const FieldDef& f : kFields) {
    out += f.name;
    out += '=';
    out += format_double(f.get(key));
    out += '\n';
  }
  const std::uint8_t seeds[3] = {key.seeds.r, key.seeds.g, key.seeds.b};
  for (int i = 0; i < 3; ++i) {
    out += kSeedNames[i];
    out += '=';
    out += std::to_string(static_cast<unsigned>(seeds[i]));
    out += '\n';
  }
  return out;
}

KeyConfig parse_key(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    std::size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError("key file line " + std::to_string(lineno) +
                        ": expected key=value");
    }
    std::string name = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) {
      name.pop_back();
    }
    while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) {
      value.erase(value.begin());
    }
    if (values.count(name)) {
      throw FormatError("duplicate key file entry: " + name);
    }
    values[name] = value;
  }

  KeyConfig key;
  auto take = [&values](const std::string& name) {
    auto it = values.find(name);
    if (it == values.end()) {
      throw FormatError("missing key file entry: " + name);
    }
    std::string v = it->second;
    values.erase(it);
    return v;
  };
  auto parse_double = [](const std::string& name, const std::string& v) {
    try {
      std::size_t pos = 0;
      double d = std::stod(v, &pos);
      if (pos != v.size()) {
        throw std::invalid_argument("trailing junk");
      }
      return d;
    } catch (const std::exception&) {
      throw FormatError("bad numeric value for " + name + ": " + v);
    }
  };

  for (const FieldDef& f : kFields) {
    f.set(key, parse_double(f.name, take(f.name)));
  }
  std::uint8_t* seeds[3] = {&key.seeds.r, &key.seeds.g, &key.seeds.b};
  for (int i = 0; i < 3; ++i) {
    std::string v = take(kSeedNames[i]);
    int s = -1;
    try {
      std::size_t pos = 0;
      s = std::stoi(v, &pos);
      if (pos != v.size()) {
        s = -1;
      }
    } catch (const std::exception&) {
      s = -1;
    }
    if (s < 0 || s > 255) {
      throw FormatError(std::string("bad seed byte for ") + kSeedNames[i] +
                        ": " + v);
    }
    *seeds[i] = static_cast<std::uint8_t>(s);
  }
  if (!values.empty()) {
    throw FormatError("unknown key file entry: " + values.begin()->first);
  }
  validate(key);
  return key;
}

KeyConfig load_key_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open key file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key(buf.str());
}

void save_key_file(const std::string& path, const KeyConfig& key) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FormatError("cannot write key file: " + path);
  }
  out << format_key(key);
  if (!out) {
    throw FormatError("short write to key file: " + path);
  }
}

namespace {

KeyConfig generate_from_rng(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int attempt = 0; attempt < 16; ++attempt) {
    KeyConfig key;
    key.henon0 = {key.henon0.x + jitter(rng), key.henon0.y + jitter(rng),
                  key.henon0.z + jitter(rng)};
    key.lorenz0 = {key.lorenz0.x + jitter(rng), key.lorenz0.y + jitter(rng),
                   key.lorenz0.z + jitter(rng)};
    key.chua0 = {key.chua0.x + jitter(rng), key.chua0.y + jitter(rng),
                 key.chua0.z + jitter(rng)};
    key.rossler0 = {key.rossler0.x + jitter(rng), key.rossler0.y + jitter(rng),
                    key.rossler0.z + jitter(rng)};
    key.seeds.r = static_cast<std::uint8_t>(byte(rng));
    key.seeds.g = static_cast<std::uint8_t>(byte(rng));
    key.seeds.b = static_cast<std::uint8_t>(byte(rng));
    try {
      // quick divergence probe over the longest possible burn-in
      generate_bundle(key, TransientCounts{1825, 1465, 1815, 1519}, 8);
      return key;
    } catch (const DivergenceError&) {
      continue;
    }
  }
  throw DivergenceError("could not find a stable key after 16 attempts");
}

}  // namespace

KeyConfig generate_key(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return generate_from_rng(rng);
}

KeyConfig generate_key() {
  std::random_device rd;
  std::mt19937_64 rng((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
  return generate_from_rng(rng);
}

}  // namespace mpcs
