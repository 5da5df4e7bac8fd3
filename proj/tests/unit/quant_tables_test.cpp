#include <gtest/gtest.h>

#include "dcsign/errors.hpp"
#include "dcsign/jpeg/quant_tables.hpp"
#include "reference_codec.hpp"

using namespace dcsign::jpeg;

TEST(QualityFactor, RejectsOutOfRange) {
  EXPECT_THROW(QualityFactor(0), dcsign::InvalidArgument);
  EXPECT_THROW(QualityFactor(101), dcsign::InvalidArgument);
  EXPECT_EQ(QualityFactor(1).value(), 1);
  EXPECT_EQ(QualityFactor(100).value(), 100);
}

TEST(QuantMatrix, RejectsZeroEntry) {
  std::array<std::uint16_t, kBlockArea> e{};
  e.fill(1);
  e[5] = 0;
  EXPECT_THROW(QuantMatrix{e}, dcsign::InvalidArgument);
  e[5] = 256;
  EXPECT_THROW(QuantMatrix{e}, dcsign::InvalidArgument);
}

TEST(QuantTables, Quality50IsBaseTable) {
  const auto t = quality_to_quant_matrices(QualityFactor(50));
  EXPECT_EQ(t.luma.entries(), kBaseLumaTable);
  EXPECT_EQ(t.chroma.entries(), kBaseChromaTable);
  EXPECT_EQ(t.luma.at(0, 0), 16);
  EXPECT_EQ(t.chroma.at(0, 0), 17);
}

TEST(QuantTables, Quality100IsAllOnes) {
  const auto t = quality_to_quant_matrices(QualityFactor(100));
  for (int i = 0; i < kBlockArea; ++i) {
    EXPECT_EQ(t.luma[i], 1);
    EXPECT_EQ(t.chroma[i], 1);
  }
}

TEST(QuantTables, Quality1Saturates) {
  const auto t = quality_to_quant_matrices(QualityFactor(1));
  EXPECT_EQ(t.luma.at(0, 0), 255);
  for (int i = 0; i < kBlockArea; ++i) EXPECT_LE(t.luma[i], 255);
}

TEST(QuantTables, KnownEntries) {
  // 16 * (200 - 150) / 100 = 8 ; 16 * 5000/10 / 100 = 80
  EXPECT_EQ(quality_to_quant_matrices(QualityFactor(75)).luma.at(0, 0), 8);
  EXPECT_EQ(quality_to_quant_matrices(QualityFactor(10)).luma.at(0, 0), 80);
  EXPECT_EQ(quality_to_quant_matrices(QualityFactor(95)).luma.at(0, 0), 2);
}

TEST(QuantTables, MonotoneInQuality) {
  for (int q = 1; q < 100; ++q) {
    const auto lo = quality_to_quant_matrices(QualityFactor(q));
    const auto hi = quality_to_quant_matrices(QualityFactor(q + 1));
    for (int i = 0; i < kBlockArea; ++i) {
      ASSERT_GE(lo.luma[i], hi.luma[i]) << "qf " << q << " entry " << i;
      ASSERT_GE(lo.chroma[i], hi.chroma[i]) << "qf " << q << " entry " << i;
      ASSERT_GE(hi.luma[i], 1);
    }
  }
}

TEST(QuantTables, MatchesLibjpegAtEveryQuality) {
  for (int q = 1; q <= 100; ++q) {
    const auto ours = quality_to_quant_matrices(QualityFactor(q));
    const auto ref = dcsign::testing::ref_quant_tables(q);
    ASSERT_EQ(ours.luma, ref.luma) << "qf " << q;
    ASSERT_EQ(ours.chroma, ref.chroma) << "qf " << q;
  }
}

TEST(Zigzag, IsPermutationWithKnownPrefix) {
  std::array<bool, kBlockArea> seen{};
  for (auto n : kZigzagToNatural) {
    ASSERT_LT(n, kBlockArea);
    EXPECT_FALSE(seen[n]);
    seen[n] = true;
  }
  EXPECT_EQ(kZigzagToNatural[0], 0);
  EXPECT_EQ(kZigzagToNatural[1], 1);
  EXPECT_EQ(kZigzagToNatural[2], 8);
  EXPECT_EQ(kZigzagToNatural[3], 16);
  EXPECT_EQ(kZigzagToNatural[63], 63);
}
