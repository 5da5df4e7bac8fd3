#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "dcsign/errors.hpp"
#include "dcsign/jpeg/codec.hpp"
#include "dcsign/jpeg/pixels.hpp"
#include "dcsign/jpeg/quant_tables.hpp"
#include "generators.hpp"
#include "reference_codec.hpp"

using namespace dcsign::jpeg;
using dcsign::testing::random_coefficient_image;
using dcsign::testing::Rng;

namespace {

struct Segment {
  std::uint8_t marker;
  std::size_t offset;  // of the 0xFF
  std::size_t length;  // payload length incl. the two length bytes, 0 if none
};

// Walks header segments up to and including the first SOS.
std::vector<Segment> walk(const std::vector<std::uint8_t>& b) {
  std::vector<Segment> out;
  std::size_t p = 2;
  out.push_back({0xD8, 0, 0});
  while (p + 4 <= b.size()) {
    const std::uint8_t m = b[p + 1];
    const std::size_t len = (b[p + 2] << 8) | b[p + 3];
    out.push_back({m, p, len});
    p += 2 + len;
    if (m == 0xDA) break;
  }
  return out;
}

std::size_t find_marker(const std::vector<std::uint8_t>& b, std::uint8_t m) {
  for (const auto& s : walk(b))
    if (s.marker == m) return s.offset;
  return std::string::npos;
}

CoefficientImage single_block(std::int16_t dc) {
  CoefficientImage img;
  img.width = img.height = 8;
  Component c;
  c.quant = quality_to_quant_matrices(QualityFactor(50)).luma;
  c.blocks_wide = c.blocks_high = 1;
  c.blocks.resize(1);
  c.blocks[0].coeffs[0] = dc;
  img.components.push_back(c);
  return img;
}

}  // namespace

TEST(Codec, SingleBlockEntropyBytes) {
  const auto bytes = encode_file(single_block(5));
  const auto segs = walk(bytes);
  const auto& sos = segs.back();
  ASSERT_EQ(sos.marker, 0xDA);
  const std::size_t data = sos.offset + 2 + sos.length;
  // DC category 3 "100", bits "101", EOB "1010", pad with ones
  ASSERT_EQ(bytes.size(), data + 4);
  EXPECT_EQ(bytes[data], 0x96);
  EXPECT_EQ(bytes[data + 1], 0xBF);
  EXPECT_EQ(bytes[data + 2], 0xFF);
  EXPECT_EQ(bytes[data + 3], 0xD9);
}

TEST(Codec, HeaderLayout) {
  Rng rng(7);
  const auto img = random_coefficient_image(rng, 40, 24, 3, Subsampling::k420);
  const auto bytes = encode_file(img);
  std::map<std::uint8_t, int> count;
  for (const auto& s : walk(bytes)) ++count[s.marker];
  EXPECT_EQ(count[0xD8], 1);
  EXPECT_EQ(count[0xE0], 1);
  EXPECT_EQ(count[0xDB], 1);
  EXPECT_EQ(count[0xC0], 1);
  EXPECT_EQ(count[0xC4], 1);
  EXPECT_EQ(count[0xDA], 1);
  EXPECT_EQ(bytes[bytes.size() - 2], 0xFF);
  EXPECT_EQ(bytes.back(), 0xD9);
}

TEST(Codec, RoundTripRandomLayouts) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto img = random_coefficient_image(rng);
    ASSERT_EQ(decode_file(encode_file(img)), img) << "iteration " << t;
  }
}

TEST(Codec, RoundTripExtremeValues) {
  auto img = single_block(2047);
  for (int i = 1; i < kBlockArea; ++i) img.components[0].blocks[0].coeffs[i] = static_cast<std::int16_t>(i % 2 ? 1023 : -1023);
  EXPECT_EQ(decode_file(encode_file(img)), img);
  img.components[0].blocks[0].coeffs[0] = -2047;
  EXPECT_EQ(decode_file(encode_file(img)), img);
}

TEST(Codec, RejectsOutOfRangeCoefficients) {
  EXPECT_THROW(encode_file(single_block(2048)), dcsign::InvalidArgument);
  auto img = single_block(0);
  img.components[0].blocks[0].coeffs[9] = 1024;
  EXPECT_THROW(encode_file(img), dcsign::InvalidArgument);
}

TEST(Codec, LongZeroRunsUseZrl) {
  auto img = single_block(0);
  img.components[0].blocks[0].coeffs[63] = 3;   // 62 zeros first
  img.components[0].blocks[0].coeffs[kZigzagToNatural[20]] = -1;
  EXPECT_EQ(decode_file(encode_file(img)), img);
}

TEST(Codec, TruncationIsCorruptStream) {
  Rng rng(12);
  const auto bytes = encode_file(random_coefficient_image(rng, 64, 64, 1, Subsampling::kNone));
  for (std::size_t cut : {bytes.size() - 2, bytes.size() / 2, std::size_t{30}, std::size_t{3}}) {
    std::vector<std::uint8_t> head(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(cut));
    EXPECT_THROW(decode_file(head), dcsign::CorruptStream) << "cut at " << cut;
  }
}

TEST(Codec, CorruptStreamReportsOffset) {
  Rng rng(13);
  const auto bytes = encode_file(random_coefficient_image(rng, 64, 64, 1, Subsampling::kNone));
  std::vector<std::uint8_t> head(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(bytes.size() / 2));
  try {
    decode_file(head);
    FAIL();
  } catch (const dcsign::CorruptStream& e) {
    EXPECT_LE(e.offset(), head.size());
  }
}

TEST(Codec, NotAJpeg) {
  const std::vector<std::uint8_t> junk{'P', '6', '\n', '1'};
  EXPECT_THROW(decode_file(junk), dcsign::CorruptStream);
  EXPECT_THROW(decode_file(std::vector<std::uint8_t>{}), dcsign::CorruptStream);
}

TEST(Codec, ProgressiveAndArithmeticUnsupported) {
  Rng rng(14);
  const auto bytes = encode_file(random_coefficient_image(rng, 16, 16, 1, Subsampling::kNone));
  const auto sof = find_marker(bytes, 0xC0);
  for (auto [m, name] : {std::pair{0xC2, "SOF2"}, std::pair{0xC9, "SOF9"}, std::pair{0xC1, "SOF1"}}) {
    auto patched = bytes;
    patched[sof + 1] = static_cast<std::uint8_t>(m);
    try {
      decode_file(patched);
      FAIL() << name;
    } catch (const dcsign::UnsupportedFormat& e) {
      EXPECT_EQ(e.marker(), name);
    }
  }
}

TEST(Codec, TwelveBitUnsupported) {
  Rng rng(15);
  auto bytes = encode_file(random_coefficient_image(rng, 16, 16, 1, Subsampling::kNone));
  bytes[find_marker(bytes, 0xC0) + 4] = 12;
  EXPECT_THROW(decode_file(bytes), dcsign::UnsupportedFormat);
}

TEST(Codec, Subsampling422Unsupported) {
  Rng rng(16);
  auto bytes = encode_file(random_coefficient_image(rng, 32, 32, 3, Subsampling::k420));
  const auto sof = find_marker(bytes, 0xC0);
  // first component's sampling byte: marker(2) len(2) P(1) Y(2) X(2) Nf(1) C1 id
  ASSERT_EQ(bytes[sof + 11], 0x22);
  bytes[sof + 11] = 0x21;
  EXPECT_THROW(decode_file(bytes), dcsign::UnsupportedFormat);
}

TEST(Codec, SkipsCommentAndAppSegments) {
  Rng rng(17);
  const auto img = random_coefficient_image(rng, 20, 20, 1, Subsampling::kNone);
  auto bytes = encode_file(img);
  const std::vector<std::uint8_t> com{0xFF, 0xFE, 0x00, 0x07, 'h', 'e', 'l', 'l', 'o'};
  const std::vector<std::uint8_t> app{0xFF, 0xE1, 0x00, 0x04, 0x00, 0x00};
  bytes.insert(bytes.begin() + 2, com.begin(), com.end());
  bytes.insert(bytes.begin() + 2, app.begin(), app.end());
  EXPECT_EQ(decode_file(bytes), img);
}

TEST(Codec, ReadsReferenceRestartIntervals) {
  Rng rng(18);
  const auto px = dcsign::testing::random_smooth_image(rng, 75, 53, 3);
  for (unsigned ri : {1u, 3u, 7u}) {
    const auto bytes = dcsign::testing::ref_encode(px, {.quality = 80, .subsample_420 = true, .restart_interval = ri});
    ASSERT_NE(find_marker(bytes, 0xDD), std::string::npos);
    EXPECT_EQ(decode_file(bytes), dcsign::testing::ref_read_coefficients(bytes)) << "interval " << ri;
  }
}

TEST(Codec, ReadsReferenceGrayAnd444) {
  Rng rng(19);
  const auto gray = dcsign::testing::random_smooth_image(rng, 33, 17, 1);
  auto bytes = dcsign::testing::ref_encode(gray, {.quality = 90});
  EXPECT_EQ(decode_file(bytes), dcsign::testing::ref_read_coefficients(bytes));
  const auto rgb = dcsign::testing::random_smooth_image(rng, 33, 17, 3);
  bytes = dcsign::testing::ref_encode(rgb, {.quality = 60, .subsample_420 = false});
  EXPECT_EQ(decode_file(bytes), dcsign::testing::ref_read_coefficients(bytes));
}

TEST(Codec, ReferenceReadsOurStreams) {
  Rng rng(20);
  for (int t = 0; t < 30; ++t) {
    const auto img = random_coefficient_image(rng);
    const auto bytes = encode_file(img);
    ASSERT_EQ(dcsign::testing::ref_read_coefficients(bytes), img) << "iteration " << t;
  }
}
