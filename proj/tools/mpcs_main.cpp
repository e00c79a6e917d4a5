// command line front end: encrypt, decrypt, analyze, avalanche, nist, keygen

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpcs/bitplane.hpp"
#include "mpcs/chaos.hpp"
#include "mpcs/diffusion.hpp"
#include "mpcs/errors.hpp"
#include "mpcs/key.hpp"
#include "mpcs/metrics.hpp"
#include "mpcs/nist.hpp"
#include "mpcs/pipeline.hpp"
#include "mpcs/ppm.hpp"

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw mpcs::FormatError("cannot open file: " + path);
  }
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw mpcs::FormatError("cannot write file: " + path);
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw mpcs::FormatError("short write: " + path);
  }
}

void print_triplet(const char* name, const std::array<double, 3>& v) {
  std::printf("%s.r=%.6f\n%s.g=%.6f\n%s.b=%.6f\n", name, v[0], name, v[1],
              name, v[2]);
}

void print_correlation(const mpcs::RgbImage& img, const char* label,
                       mpcs::Direction dir) {
  const char* chan[3] = {"r", "g", "b"};
  try {
    mpcs::CorrelationResult c = mpcs::correlation(img, dir);
    for (int i = 0; i < 3; ++i) {
      std::printf("corr.%s.%s=%.6f\n", label, chan[i], c.channel[i]);
    }
    std::printf("corr.%s.mean=%.6f\n", label, c.mean);
  } catch (const std::exception&) {
    for (int i = 0; i < 3; ++i) {
      std::printf("corr.%s.%s=undefined\n", label, chan[i]);
    }
    std::printf("corr.%s.mean=undefined\n", label);
  }
}

void run_analyze(const std::string& in_path, const std::string& ref_path) {
  mpcs::RgbImage img = mpcs::load_ppm(in_path);
  std::printf("width=%u\nheight=%u\n", img.width, img.height);
  auto hists = mpcs::histogram(img);
  const char* chan[3] = {"r", "g", "b"};
  for (int c = 0; c < 3; ++c) {
    std::uint64_t lo = hists[c][0], hi = hists[c][0];
    for (std::uint64_t v : hists[c]) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    std::printf("hist.%s.min=%llu\nhist.%s.max=%llu\n", chan[c],
                static_cast<unsigned long long>(lo), chan[c],
                static_cast<unsigned long long>(hi));
  }
  print_triplet("mean", mpcs::mean_gray(img));
  print_triplet("chi2", mpcs::chi_square(img));
  print_correlation(img, "horizontal", mpcs::Direction::Horizontal);
  print_correlation(img, "vertical", mpcs::Direction::Vertical);
  print_correlation(img, "diagonal", mpcs::Direction::Diagonal);
  print_triplet("entropy", mpcs::entropy(img));
  if (!ref_path.empty()) {
    mpcs::RgbImage ref = mpcs::load_ppm(ref_path);
    print_triplet("npcr", mpcs::npcr(img, ref));
    print_triplet("uaci", mpcs::uaci(img, ref));
  }
}

void run_avalanche(const std::string& in_path, const std::string& key_path,
                   const std::string& pixel_arg) {
  mpcs::RgbImage p1 = mpcs::load_ppm(in_path);
  mpcs::KeyConfig key = mpcs::load_key_file(key_path);
  std::uint32_t px = p1.width / 2, py = p1.height / 2;
  if (!pixel_arg.empty()) {
    if (std::sscanf(pixel_arg.c_str(), "%u,%u", &px, &py) != 2) {
      throw mpcs::FormatError("--pixel expects x,y");
    }
  }
  if (px >= p1.width || py >= p1.height) {
    throw mpcs::FormatError("pixel out of bounds");
  }
  mpcs::RgbImage p2 = p1;
  std::size_t off = (static_cast<std::size_t>(py) * p1.width + px) * 3;
  p2.pixels[off] = 0;
  p2.pixels[off + 1] = 0;
  p2.pixels[off + 2] = 0;

  mpcs::CipherContainer ct1 = mpcs::encrypt(p1, key);
  mpcs::CipherContainer ct2 = mpcs::encrypt(p2, key);
  auto to_image = [](const mpcs::CipherContainer& ct) {
    mpcs::RgbImage img;
    img.width = ct.width;
    img.height = ct.height;
    std::size_t mn = img.pixel_count();
    img.pixels.resize(mn * 3);
    for (std::size_t p = 0; p < mn; ++p) {
      img.pixels[p * 3] = ct.payload[p];
      img.pixels[p * 3 + 1] = ct.payload[mn + p];
      img.pixels[p * 3 + 2] = ct.payload[2 * mn + p];
    }
    return img;
  };
  mpcs::RgbImage c1 = to_image(ct1);
  mpcs::RgbImage c2 = to_image(ct2);
  std::printf("pixel=%u,%u\n", px, py);
  print_triplet("npcr.c1c2", mpcs::npcr(c1, c2));
  print_triplet("uaci.c1c2", mpcs::uaci(c1, c2));
  print_triplet("npcr.p1c1", mpcs::npcr(p1, c1));
  print_triplet("uaci.p1c1", mpcs::uaci(p1, c1));
}

void run_nist(const std::string& in_path, const std::string& key_path) {
  mpcs::RgbImage img = mpcs::load_ppm(in_path);
  mpcs::KeyConfig key = mpcs::load_key_file(key_path);
  mpcs::BitMatrix zeta = mpcs::image_to_bitmatrix(img);
  std::uint64_t delta = mpcs::popcount_delta(zeta);
  mpcs::TransientCounts tc = mpcs::transient_counts(delta);
  mpcs::SequenceBundle bundle =
      mpcs::generate_bundle(key, tc, img.pixel_count());

  // column order X1..X4, Y1..Y4, Z1..Z4
  std::vector<mpcs::BatteryReport> reports;
  std::vector<std::string> labels;
  for (int c = 0; c < 3; ++c) {
    for (int si = 0; si < 4; ++si) {
      const char comp[3] = {'X', 'Y', 'Z'};
      labels.push_back(std::string(1, comp[c]) + std::to_string(si + 1));
      reports.push_back(
          mpcs::battery(mpcs::binarize(bundle.pre[si][c], key.theta)));
    }
  }

  std::printf("%-18s", "test");
  for (const std::string& l : labels) {
    std::printf(" %-9s", l.c_str());
  }
  std::printf(" verdict\n");
  for (std::size_t row = 0; row < reports[0].verdicts.size(); ++row) {
    std::printf("%-18s", reports[0].verdicts[row].name.c_str());
    bool any_fail = false;
    bool any_ran = false;
    for (const mpcs::BatteryReport& rep : reports) {
      const mpcs::TestVerdict& v = rep.verdicts[row];
      if (v.skipped) {
        std::printf(" %-9s", "skipped");
      } else {
        std::printf(" %-9.6f", v.p_value);
        any_ran = true;
        any_fail |= !v.pass;
      }
    }
    std::printf(" %s\n", !any_ran ? "skipped" : (any_fail ? "fail" : "pass"));
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"multi-chaotic color image cipher toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, key_path, ref_path, pixel_arg;
  std::uint64_t seed = 0;

  CLI::App* enc = app.add_subcommand("encrypt", "encrypt a PPM image");
  enc->add_option("--in", in_path, "plaintext PPM")->required();
  enc->add_option("--key", key_path, "key file")->required();
  enc->add_option("--out", out_path, "output container")->required();

  CLI::App* dec = app.add_subcommand("decrypt", "decrypt a container");
  dec->add_option("--in", in_path, "cipher container")->required();
  dec->add_option("--key", key_path, "key file")->required();
  dec->add_option("--out", out_path, "output PPM")->required();

  CLI::App* ana = app.add_subcommand("analyze", "image statistics report");
  ana->add_option("--in", in_path, "image to analyze")->required();
  ana->add_option("--ref", ref_path, "reference image for NPCR/UACI");

  CLI::App* ava = app.add_subcommand("avalanche", "one-pixel sensitivity");
  ava->add_option("--in", in_path, "plaintext PPM")->required();
  ava->add_option("--key", key_path, "key file")->required();
  ava->add_option("--pixel", pixel_arg, "pixel to zero, x,y (default center)");

  CLI::App* nis = app.add_subcommand("nist", "randomness battery grid");
  nis->add_option("--in", in_path, "plaintext PPM")->required();
  nis->add_option("--key", key_path, "key file")->required();

  CLI::App* gen = app.add_subcommand("keygen", "write a fresh key file");
  gen->add_option("--out", out_path, "output key file")->required();
  CLI::Option* seed_opt = gen->add_option("--seed", seed, "deterministic seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (enc->parsed()) {
    mpcs::RgbImage img = mpcs::load_ppm(in_path);
    mpcs::KeyConfig key = mpcs::load_key_file(key_path);
    mpcs::CipherContainer ct = mpcs::encrypt(img, key);
    write_file(out_path, mpcs::serialize(ct));
    mpcs::TransientCounts tc = mpcs::transient_counts(ct.delta);
    std::fprintf(stderr, "delta=%llu\ntransients=%u %u %u %u\n",
                 static_cast<unsigned long long>(ct.delta), tc.henon,
                 tc.lorenz, tc.chua, tc.rossler);
  } else if (dec->parsed()) {
    mpcs::CipherContainer ct = mpcs::parse_container(read_file(in_path));
    mpcs::KeyConfig key = mpcs::load_key_file(key_path);
    mpcs::save_ppm(out_path, mpcs::decrypt(ct, key));
  } else if (ana->parsed()) {
    run_analyze(in_path, ref_path);
  } else if (ava->parsed()) {
    run_avalanche(in_path, key_path, pixel_arg);
  } else if (nis->parsed()) {
    run_nist(in_path, key_path);
  } else if (gen->parsed()) {
    mpcs::KeyConfig key = seed_opt->count() > 0 ? mpcs::generate_key(seed)
                                                : mpcs::generate_key();
    mpcs::save_key_file(out_path, key);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const mpcs::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
