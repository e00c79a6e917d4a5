// python bindings: byte-oriented wrappers over the core pipeline

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "mpcs/bitplane.hpp"
#include "mpcs/chaos.hpp"
#include "mpcs/errors.hpp"
#include "mpcs/key.hpp"
#include "mpcs/metrics.hpp"
#include "mpcs/nist.hpp"
#include "mpcs/pipeline.hpp"
#include "mpcs/ppm.hpp"

namespace py = pybind11;

namespace {

std::vector<std::uint8_t> to_bytes(const py::bytes& data) {
  std::string s = data;
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

py::bytes from_bytes(const std::vector<std::uint8_t>& data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

mpcs::RgbImage to_image(std::uint32_t width, std::uint32_t height,
                        const py::bytes& pixels) {
  mpcs::RgbImage img{width, height, to_bytes(pixels)};
  if (img.pixels.size() != img.pixel_count() * 3) {
    throw std::invalid_argument("pixel buffer must hold width*height*3 bytes");
  }
  return img;
}

py::tuple image_tuple(const mpcs::RgbImage& img) {
  return py::make_tuple(img.width, img.height, from_bytes(img.pixels));
}

py::tuple triple(const std::array<double, 3>& v) {
  return py::make_tuple(v[0], v[1], v[2]);
}

mpcs::Direction parse_direction(const std::string& name) {
  if (name == "horizontal") return mpcs::Direction::Horizontal;
  if (name == "vertical") return mpcs::Direction::Vertical;
  if (name == "diagonal") return mpcs::Direction::Diagonal;
  throw std::invalid_argument(
      "direction must be horizontal, vertical or diagonal");
}

py::list battery_report(const std::vector<std::uint8_t>& bits) {
  for (std::uint8_t b : bits) {
    if (b > 1) {
      throw std::invalid_argument("battery expects bytes of value 0 or 1");
    }
  }
  mpcs::BatteryReport rep = mpcs::battery(bits);
  py::list out;
  for (const mpcs::TestVerdict& v : rep.verdicts) {
    py::dict d;
    d["name"] = v.name;
    d["p_value"] = v.p_value;
    d["passed"] = v.pass;
    d["skipped"] = v.skipped;
    d["note"] = v.note;
    out.append(d);
  }
  return out;
}

py::dict keystream_sequences(std::uint32_t width, std::uint32_t height,
                             const py::bytes& pixels,
                             const std::string& key_text) {
  mpcs::RgbImage img = to_image(width, height, pixels);
  mpcs::KeyConfig key = mpcs::parse_key(key_text);
  mpcs::BitMatrix zeta = mpcs::image_to_bitmatrix(img);
  mpcs::TransientCounts tc = mpcs::transient_counts(mpcs::popcount_delta(zeta));
  mpcs::SequenceBundle bundle =
      mpcs::generate_bundle(key, tc, img.pixel_count());
  const char comp[3] = {'X', 'Y', 'Z'};
  py::dict out;
  for (int c = 0; c < 3; ++c) {
    for (int si = 0; si < 4; ++si) {
      std::string label = std::string(1, comp[c]) + std::to_string(si + 1);
      out[py::str(label)] =
          from_bytes(mpcs::binarize(bundle.pre[si][c], key.theta));
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "multi-chaotic color image cipher core";

  py::register_exception<mpcs::FormatError>(m, "FormatError",
                                            PyExc_ValueError);
  py::register_exception<mpcs::DivergenceError>(m, "DivergenceError",
                                                PyExc_ArithmeticError);

  m.def(
      "generate_key", [](std::uint64_t seed) {
        return mpcs::format_key(mpcs::generate_key(seed));
      },
      py::arg("seed"), "deterministic key text from a seed");
  m.def(
      "generate_key", [] { return mpcs::format_key(mpcs::generate_key()); },
      "key text from OS entropy");

  m.def(
      "encrypt",
      [](std::uint32_t width, std::uint32_t height, const py::bytes& pixels,
         const std::string& key_text) {
        mpcs::RgbImage img = to_image(width, height, pixels);
        mpcs::KeyConfig key = mpcs::parse_key(key_text);
        return from_bytes(mpcs::serialize(mpcs::encrypt(img, key)));
      },
      py::arg("width"), py::arg("height"), py::arg("pixels"),
      py::arg("key_text"),
      "encrypt interleaved RGB bytes, returns a cipher container");

  m.def(
      "decrypt",
      [](const py::bytes& container, const std::string& key_text) {
        mpcs::CipherContainer ct = mpcs::parse_container(to_bytes(container));
        mpcs::KeyConfig key = mpcs::parse_key(key_text);
        return image_tuple(mpcs::decrypt(ct, key));
      },
      py::arg("container"), py::arg("key_text"),
      "decrypt a container, returns (width, height, pixels)");

  m.def(
      "read_ppm",
      [](const py::bytes& data) {
        return image_tuple(mpcs::read_ppm(to_bytes(data)));
      },
      py::arg("data"), "parse a binary P6 PPM, returns (width, height, pixels)");
  m.def(
      "write_ppm",
      [](std::uint32_t width, std::uint32_t height, const py::bytes& pixels) {
        return from_bytes(mpcs::write_ppm(to_image(width, height, pixels)));
      },
      py::arg("width"), py::arg("height"), py::arg("pixels"),
      "serialize to canonical binary P6");

  m.def(
      "entropy",
      [](std::uint32_t w, std::uint32_t h, const py::bytes& px) {
        return triple(mpcs::entropy(to_image(w, h, px)));
      },
      py::arg("width"), py::arg("height"), py::arg("pixels"));
  m.def(
      "mean_gray",
      [](std::uint32_t w, std::uint32_t h, const py::bytes& px) {
        return triple(mpcs::mean_gray(to_image(w, h, px)));
      },
      py::arg("width"), py::arg("height"), py::arg("pixels"));
  m.def(
      "chi_square",
      [](std::uint32_t w, std::uint32_t h, const py::bytes& px) {
        return triple(mpcs::chi_square(to_image(w, h, px)));
      },
      py::arg("width"), py::arg("height"), py::arg("pixels"));
  m.def(
      "correlation",
      [](std::uint32_t w, std::uint32_t h, const py::bytes& px,
         const std::string& direction) {
        mpcs::CorrelationResult c =
            mpcs::correlation(to_image(w, h, px), parse_direction(direction));
        return py::make_tuple(triple(c.channel), c.mean);
      },
      py::arg("width"), py::arg("height"), py::arg("pixels"),
      py::arg("direction"),
      "adjacent-pair correlation, returns ((r, g, b), mean)");
  m.def(
      "npcr",
      [](std::uint32_t w, std::uint32_t h, const py::bytes& a,
         const py::bytes& b) {
        return triple(mpcs::npcr(to_image(w, h, a), to_image(w, h, b)));
      },
      py::arg("width"), py::arg("height"), py::arg("pixels_a"),
      py::arg("pixels_b"));
  m.def(
      "uaci",
      [](std::uint32_t w, std::uint32_t h, const py::bytes& a,
         const py::bytes& b) {
        return triple(mpcs::uaci(to_image(w, h, a), to_image(w, h, b)));
      },
      py::arg("width"), py::arg("height"), py::arg("pixels_a"),
      py::arg("pixels_b"));

  m.def(
      "battery",
      [](const py::bytes& bits) { return battery_report(to_bytes(bits)); },
      py::arg("bits"),
      "randomness battery over bytes of value 0/1, returns verdict dicts");
  m.def("keystream_sequences", &keystream_sequences, py::arg("width"),
        py::arg("height"), py::arg("pixels"), py::arg("key_text"),
        "the 12 binarized keystream sequences an image and key induce");
}
