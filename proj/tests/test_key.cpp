#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "mpcs/errors.hpp"
#include "mpcs/key.hpp"

using namespace mpcs;

namespace {

bool keys_equal(const KeyConfig& a, const KeyConfig& b) {
  return a.henon.a == b.henon.a && a.henon.b == b.henon.b &&
         a.henon0.x == b.henon0.x && a.henon0.y == b.henon0.y &&
         a.henon0.z == b.henon0.z && a.lorenz.sigma == b.lorenz.sigma &&
         a.lorenz.rho == b.lorenz.rho && a.lorenz.beta == b.lorenz.beta &&
         a.lorenz.h == b.lorenz.h && a.lorenz0.x == b.lorenz0.x &&
         a.lorenz0.y == b.lorenz0.y && a.lorenz0.z == b.lorenz0.z &&
         a.chua.alpha == b.chua.alpha && a.chua.beta == b.chua.beta &&
         a.chua.m0 == b.chua.m0 && a.chua.m1 == b.chua.m1 &&
         a.chua.h == b.chua.h && a.chua0.x == b.chua0.x &&
         a.chua0.y == b.chua0.y && a.chua0.z == b.chua0.z &&
         a.rossler.a == b.rossler.a && a.rossler.b == b.rossler.b &&
         a.rossler.c == b.rossler.c && a.rossler.h == b.rossler.h &&
         a.rossler0.x == b.rossler0.x && a.rossler0.y == b.rossler0.y &&
         a.rossler0.z == b.rossler0.z && a.theta == b.theta &&
         a.seeds.r == b.seeds.r && a.seeds.g == b.seeds.g &&
         a.seeds.b == b.seeds.b;
}

}  // namespace

TEST_CASE("key text round trip preserves every scalar exactly") {
  KeyConfig key = generate_key(42);
  KeyConfig back = parse_key(format_key(key));
  CHECK(keys_equal(key, back));

  KeyConfig defaults;
  CHECK(keys_equal(defaults, parse_key(format_key(defaults))));
}

TEST_CASE("key parser accepts comments and blank lines") {
  std::string text = format_key(KeyConfig{});
  text = "# master key, keep private\n\n  \t\n" + text +
         "# trailing comment\n";
  KeyConfig key = parse_key(text);
  CHECK(keys_equal(key, KeyConfig{}));

  // inline comment after a value
  std::string inlined = format_key(KeyConfig{});
  inlined.insert(inlined.find('\n'), "   # tuned");
  CHECK(keys_equal(parse_key(inlined), KeyConfig{}));
}

TEST_CASE("key parser rejects malformed input") {
  const std::string good = format_key(KeyConfig{});

  CHECK_THROWS_AS(parse_key(good + "henon.a=1.5\n"), FormatError);
  CHECK_THROWS_AS(parse_key(good + "bogus.field=1\n"), FormatError);
  CHECK_THROWS_AS(parse_key("just some words\n"), FormatError);
  CHECK_THROWS_AS(parse_key(""), FormatError);

  std::string missing = good.substr(good.find('\n') + 1);
  CHECK_THROWS_AS(parse_key(missing), FormatError);

  std::string bad_num = good;
  bad_num.replace(bad_num.find("henon.a=") + 8, 4, "zzzz");
  CHECK_THROWS_AS(parse_key(bad_num), FormatError);

  KeyConfig big_seed;
  std::string text = format_key(big_seed);
  std::size_t pos = text.find("seed.r=");
  text.replace(pos, text.find('\n', pos) - pos, "seed.r=256");
  CHECK_THROWS_AS(parse_key(text), FormatError);

  KeyConfig bad_theta;
  bad_theta.theta = 1.0;
  CHECK_THROWS_AS(parse_key(format_key(bad_theta)), FormatError);

  KeyConfig bad_h;
  bad_h.lorenz.h = 0.0;
  CHECK_THROWS_AS(parse_key(format_key(bad_h)), FormatError);
}

TEST_CASE("key file save and load") {
  std::string path = "test_key_roundtrip.key";
  KeyConfig key = generate_key(7);
  save_key_file(path, key);
  KeyConfig back = load_key_file(path);
  CHECK(keys_equal(key, back));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_key_file("no_such_file.key"), FormatError);
}

TEST_CASE("generated keys") {
  SUBCASE("seeded generation is deterministic") {
    CHECK(keys_equal(generate_key(1), generate_key(1)));
    CHECK_FALSE(keys_equal(generate_key(1), generate_key(2)));
  }
  SUBCASE("initial conditions stay near the documented defaults") {
    KeyConfig defaults;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      KeyConfig key = generate_key(seed);
      CHECK(std::fabs(key.henon0.x - defaults.henon0.x) <= 0.05);
      CHECK(std::fabs(key.henon0.y - defaults.henon0.y) <= 0.05);
      CHECK(std::fabs(key.henon0.z - defaults.henon0.z) <= 0.05);
      CHECK(std::fabs(key.lorenz0.x - defaults.lorenz0.x) <= 0.05);
      CHECK(std::fabs(key.chua0.x - defaults.chua0.x) <= 0.05);
      CHECK(std::fabs(key.rossler0.x - defaults.rossler0.x) <= 0.05);
      // parameters are not jittered, only initial conditions and seeds
      CHECK(key.henon.a == defaults.henon.a);
      CHECK(key.lorenz.sigma == defaults.lorenz.sigma);
      CHECK(key.theta == defaults.theta);
    }
  }
  SUBCASE("entropy-seeded keys differ") {
    CHECK_FALSE(keys_equal(generate_key(), generate_key()));
  }
}
