#include "dcsign/jpeg/dct.hpp"

#include <cmath>
#include <numbers>

namespace dcsign::jpeg {

namespace {

// cos((2x+1) u pi / 16) with the u = 0 row exactly 1, and the separable
// normalization C(u)C(v)/4 kept apart so DC sums stay exact (0.125 * sum).
struct Tables {
  double cosine[kBlockSize][kBlockSize];
  double norm[kBlockSize][kBlockSize];
  Tables() {
    for (int u = 0; u < kBlockSize; ++u)
      for (int x = 0; x < kBlockSize; ++x)
        cosine[u][x] = u == 0 ? 1.0 : std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
    const double half_sqrt2 = std::numbers::sqrt2 / 2.0;
    for (int v = 0; v < kBlockSize; ++v)
      for (int u = 0; u < kBlockSize; ++u) {
        if (u == 0 && v == 0)
          norm[v][u] = 0.125;
        else if (u == 0 || v == 0)
          norm[v][u] = 0.25 * half_sqrt2;
        else
          norm[v][u] = 0.25;
      }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

RealBlock fdct(const RealBlock& samples) {
  const auto& t = tables();
  RealBlock rows{};
  for (int y = 0; y < kBlockSize; ++y)
    for (int u = 0; u < kBlockSize; ++u) {
      double acc = 0.0;
      for (int x = 0; x < kBlockSize; ++x) acc += t.cosine[u][x] * samples[y * kBlockSize + x];
      rows[y * kBlockSize + u] = acc;
    }
  RealBlock out{};
  for (int v = 0; v < kBlockSize; ++v)
    for (int u = 0; u < kBlockSize; ++u) {
      double acc = 0.0;
      for (int y = 0; y < kBlockSize; ++y) acc += t.cosine[v][y] * rows[y * kBlockSize + u];
      out[v * kBlockSize + u] = t.norm[v][u] * acc;
    }
  return out;
}

RealBlock idct(const RealBlock& coeffs) {
  const auto& t = tables();
  RealBlock scaled{};
  for (int v = 0; v < kBlockSize; ++v)
    for (int u = 0; u < kBlockSize; ++u) scaled[v * kBlockSize + u] = t.norm[v][u] * coeffs[v * kBlockSize + u];
  RealBlock cols{};
  for (int y = 0; y < kBlockSize; ++y)
    for (int u = 0; u < kBlockSize; ++u) {
      double acc = 0.0;
      for (int v = 0; v < kBlockSize; ++v) acc += t.cosine[v][y] * scaled[v * kBlockSize + u];
      cols[y * kBlockSize + u] = acc;
    }
  RealBlock out{};
  for (int y = 0; y < kBlockSize; ++y)
    for (int x = 0; x < kBlockSize; ++x) {
      double acc = 0.0;
      for (int u = 0; u < kBlockSize; ++u) acc += t.cosine[u][x] * cols[y * kBlockSize + u];
      out[y * kBlockSize + x] = acc;
    }
  return out;
}

CoefficientBlock quantize(const RealBlock& coeffs, const QuantMatrix& q) {
  CoefficientBlock out;
  for (int i = 0; i < kBlockArea; ++i)
    out.coeffs[i] = static_cast<std::int16_t>(std::round(coeffs[i] / q[i]));
  return out;
}

RealBlock dequantize(const CoefficientBlock& block, const QuantMatrix& q) {
  RealBlock out{};
  for (int i = 0; i < kBlockArea; ++i) out[i] = static_cast<double>(block.coeffs[i]) * q[i];
  return out;
}

}  // namespace dcsign::jpeg
