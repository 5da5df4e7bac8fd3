#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "dcsign/errors.hpp"
#include "dcsign/io.hpp"
#include "generators.hpp"

using dcsign::testing::Rng;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(Pnm, RoundTrip) {
  Rng rng(1);
  for (int ch : {1, 3}) {
    const auto img = dcsign::testing::random_smooth_image(rng, 13, 7, ch);
    EXPECT_EQ(dcsign::parse_pnm(dcsign::format_pnm(img)), img);
  }
}

TEST(Pnm, HeaderWithComments) {
  auto b = bytes_of("P5\n# made by hand\n2 # width\n1\n255\n");
  b.push_back(7);
  b.push_back(200);
  const auto img = dcsign::parse_pnm(b);
  EXPECT_EQ(img.width, 2);
  EXPECT_EQ(img.height, 1);
  EXPECT_EQ(img.channels, 1);
  EXPECT_EQ(img.at(1, 0), 200);
}

TEST(Pnm, RasterMayStartWithWhitespaceByte) {
  auto b = bytes_of("P5 1 1 255 ");
  b.push_back(' ');
  EXPECT_EQ(dcsign::parse_pnm(b).at(0, 0), ' ');
}

TEST(Pnm, Rejections) {
  EXPECT_THROW(dcsign::parse_pnm(bytes_of("P3\n1 1\n255\n0 0 0\n")), dcsign::UnsupportedFormat);
  EXPECT_THROW(dcsign::parse_pnm(bytes_of("P5\n1 1\n65535\n\x01\x02")), dcsign::UnsupportedFormat);
  EXPECT_THROW(dcsign::parse_pnm(bytes_of("P6\n2 2\n255\nabc")), dcsign::CorruptStream);
  EXPECT_THROW(dcsign::parse_pnm(bytes_of("P5\nx 2\n255\n")), dcsign::CorruptStream);
  EXPECT_THROW(dcsign::parse_pnm(bytes_of("P5\n0 2\n255\n")), dcsign::CorruptStream);
  EXPECT_THROW(dcsign::parse_pnm(bytes_of("")), dcsign::UnsupportedFormat);
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "dcsign_io_test.bin";
  const std::vector<std::uint8_t> data{0, 1, 2, 255};
  dcsign::write_file(path, data);
  EXPECT_EQ(dcsign::read_file(path), data);
  std::filesystem::remove(path);
  EXPECT_THROW(dcsign::read_file(path), dcsign::IoError);
}
