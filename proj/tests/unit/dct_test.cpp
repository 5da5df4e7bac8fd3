#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dcsign/jpeg/dct.hpp"
#include "dcsign/jpeg/quant_tables.hpp"
#include "oracles.hpp"

using namespace dcsign::jpeg;

namespace {

RealBlock constant(double v) {
  RealBlock b;
  b.fill(v);
  return b;
}

}  // namespace

TEST(Dct, ZeroBlock) {
  for (double c : fdct(constant(0))) EXPECT_EQ(c, 0.0);
}

TEST(Dct, ConstantBlockDcIsEightTimesValue) {
  EXPECT_EQ(fdct(constant(127))[0], 1016.0);
  EXPECT_EQ(fdct(constant(-128))[0], -1024.0);
  EXPECT_EQ(fdct(constant(5))[0], 40.0);
  for (int i = 1; i < kBlockArea; ++i) EXPECT_NEAR(fdct(constant(127))[i], 0.0, 1e-9);
}

TEST(Dct, InverseOfLoneDc) {
  RealBlock c{};
  c[0] = 8;
  for (double s : idct(c)) EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(Dct, RoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-128, 127);
  for (int t = 0; t < 200; ++t) {
    RealBlock s;
    for (auto& v : s) v = d(rng);
    const auto back = idct(fdct(s));
    for (int i = 0; i < kBlockArea; ++i) ASSERT_NEAR(back[i], s[i], 1e-9);
  }
}

TEST(Dct, PreservesEnergy) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-128, 127);
  for (int t = 0; t < 50; ++t) {
    RealBlock s;
    for (auto& v : s) v = d(rng);
    double e1 = 0, e2 = 0;
    const auto c = fdct(s);
    for (int i = 0; i < kBlockArea; ++i) {
      e1 += s[i] * s[i];
      e2 += c[i] * c[i];
    }
    EXPECT_NEAR(e1, e2, 1e-6 * e1);
  }
}

TEST(Dct, MatchesNaiveFormula) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-128, 127);
  for (int t = 0; t < 100; ++t) {
    RealBlock s;
    for (auto& v : s) v = d(rng);
    const auto a = fdct(s);
    const auto b = dcsign::testing::naive_fdct(s);
    for (int i = 0; i < kBlockArea; ++i) ASSERT_NEAR(a[i], b[i], 1e-9);
  }
}

TEST(Quantize, RoundsHalfAwayFromZero) {
  std::array<std::uint16_t, kBlockArea> e{};
  e.fill(16);
  const QuantMatrix q(e);
  RealBlock s{};
  s[0] = 100;
  s[1] = -100;
  s[2] = 8;
  s[3] = -8;
  s[4] = 7.999;
  const auto b = quantize(s, q);
  EXPECT_EQ(b.coeffs[0], 6);
  EXPECT_EQ(b.coeffs[1], -6);
  EXPECT_EQ(b.coeffs[2], 1);
  EXPECT_EQ(b.coeffs[3], -1);
  EXPECT_EQ(b.coeffs[4], 0);
  const auto r = dequantize(b, q);
  EXPECT_EQ(r[0], 96.0);
  EXPECT_EQ(r[1], -96.0);
}

TEST(Quantize, HalfStepBound) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-1024, 1016);
  std::uniform_int_distribution<int> qd(1, 255);
  for (int t = 0; t < 2000; ++t) {
    std::array<std::uint16_t, kBlockArea> e{};
    for (auto& v : e) v = static_cast<std::uint16_t>(qd(rng));
    const QuantMatrix q(e);
    RealBlock s;
    for (auto& v : s) v = d(rng);
    const auto r = dequantize(quantize(s, q), q);
    for (int i = 0; i < kBlockArea; ++i) ASSERT_LE(std::abs(r[i] - s[i]), q[i] / 2.0);
  }
}

TEST(Quantize, SignOfNonzeroQuotientMatchesInput) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-1024, 1016);
  for (int qf = 70; qf <= 95; qf += 5) {
    const auto q = quality_to_quant_matrices(QualityFactor(qf)).luma;
    for (int t = 0; t < 500; ++t) {
      RealBlock s;
      for (auto& v : s) v = d(rng);
      const auto b = quantize(s, q);
      for (int i = 0; i < kBlockArea; ++i)
        if (b.coeffs[i] != 0) {
          ASSERT_EQ(b.coeffs[i] > 0, s[i] > 0);
        }
    }
  }
}
