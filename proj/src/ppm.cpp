#include "mpcs/ppm.hpp"

#include <fstream>

#include "mpcs/errors.hpp"

namespace mpcs {

namespace {

class Cursor {
public:
  explicit Cursor(const std::vector<std::uint8_t>& bytes) : data_(bytes) {}

  bool eof() const { return pos_ >= data_.size(); }
  std::uint8_t peek() const { return data_[pos_]; }
  std::uint8_t next() { return data_[pos_++]; }
  std::size_t pos() const { return pos_; }

  // whitespace and '#'-to-end-of-line comments
  void skip_space_and_comments() {
    while (!eof()) {
      std::uint8_t c = peek();
      if (c == '#') {
        while (!eof() && next() != '\n') {
        }
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::uint64_t read_uint() {
    skip_space_and_comments();
    if (eof() || peek() < '0' || peek() > '9') {
      throw FormatError("expected integer in PPM header");
    }
    std::uint64_t v = 0;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + (next() - '0');
      if (v > 0xFFFFFFFFull) {
        throw FormatError("PPM header value too large");
      }
    }
    return v;
  }

private:
  const std::vector<std::uint8_t>& data_;
  std::size_t pos_ = 0;
};

}  // namespace

RgbImage read_ppm(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    throw FormatError("not a P6 PPM file");
  }
  Cursor cur(bytes);
  cur.next();
  cur.next();
  std::uint64_t width = cur.read_uint();
  std::uint64_t height = cur.read_uint();
  std::uint64_t maxval = cur.read_uint();
  if (width == 0 || height == 0) {
    throw FormatError("PPM dimensions must be positive");
  }
  if (maxval != 255) {
    throw FormatError("only maxval 255 PPM is supported");
  }
  if (cur.eof()) {
    throw FormatError("PPM payload missing");
  }
  std::uint8_t sep = cur.next();
  if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n') {
    throw FormatError("expected whitespace after PPM maxval");
  }
  std::uint64_t need = width * height * 3;
  if (bytes.size() - cur.pos() < need) {
    throw FormatError("PPM payload shorter than header promises");
  }
  RgbImage img;
  img.width = static_cast<std::uint32_t>(width);
  img.height = static_cast<std::uint32_t>(height);
  img.pixels.assign(bytes.begin() + cur.pos(),
                    bytes.begin() + cur.pos() + need);
  return img;
}

std::vector<std::uint8_t> write_ppm(const RgbImage& img) {
  std::string header = "P6\n" + std::to_string(img.width) + " " +
                       std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.pixels.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

RgbImage load_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open image: " + path);
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return read_ppm(bytes);
}

void save_ppm(const std::string& path, const RgbImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FormatError("cannot write image: " + path);
  }
  std::vector<std::uint8_t> bytes = write_ppm(img);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw FormatError("short write to image: " + path);
  }
}

}  // namespace mpcs
