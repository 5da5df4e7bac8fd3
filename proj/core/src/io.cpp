#include "dcsign/io.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <string>

#include "dcsign/errors.hpp"

namespace dcsign {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw IoError("write failed: " + path.string());
}

namespace {

class HeaderParser {
 public:
  explicit HeaderParser(std::span<const std::uint8_t> b) : b_(b) {}

  int number() {
    skip_space_and_comments();
    if (pos_ >= b_.size() || !std::isdigit(b_[pos_])) throw CorruptStream(pos_, "malformed PNM header");
    long v = 0;
    while (pos_ < b_.size() && std::isdigit(b_[pos_])) {
      v = v * 10 + (b_[pos_++] - '0');
      if (v > 1'000'000) throw CorruptStream(pos_, "PNM header value too large");
    }
    return static_cast<int>(v);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_start() {
    if (pos_ >= b_.size() || !std::isspace(b_[pos_])) throw CorruptStream(pos_, "malformed PNM header");
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < b_.size()) {
      if (b_[pos_] == '#') {
        while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
      } else if (std::isspace(b_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> b_;
  std::size_t pos_ = 2;
};

}  // namespace

jpeg::PixelImage parse_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
    throw UnsupportedFormat("PNM", "not a binary PGM/PPM file");
  const int channels = bytes[1] == '6' ? 3 : 1;
  HeaderParser h(bytes);
  const int width = h.number();
  const int height = h.number();
  const int maxval = h.number();
  if (maxval != 255) throw UnsupportedFormat("PNM", "only maxval 255 is supported");
  if (width <= 0 || height <= 0) throw CorruptStream(0, "PNM dimensions must be positive");
  const std::size_t start = h.raster_start();
  jpeg::PixelImage img(width, height, channels);
  if (bytes.size() - start < img.samples.size()) throw CorruptStream(bytes.size(), "PNM raster truncated");
  std::memcpy(img.samples.data(), bytes.data() + start, img.samples.size());
  return img;
}

std::vector<std::uint8_t> format_pnm(const jpeg::PixelImage& img) {
  const std::string header = std::string(img.channels == 3 ? "P6" : "P5") + "\n" + std::to_string(img.width) +
                             " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.samples.begin(), img.samples.end());
  return out;
}

}  // namespace dcsign
