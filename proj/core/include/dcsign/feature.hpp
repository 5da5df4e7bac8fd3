#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dcsign/jpeg/types.hpp"

namespace dcsign {

inline constexpr int kMaxThreshold = 65535;

// Enrolled identification feature: one ternary code per Y block in raster
// order (edge-padding blocks included).
struct TernaryFeature {
  std::string image_id;
  int width = 0;
  int height = 0;
  int th = 0;
  std::vector<std::int8_t> codes;  // each in {-1, 0, +1}

  std::size_t block_count() const { return codes.size(); }
  friend bool operator==(const TernaryFeature&, const TernaryFeature&) = default;
};

constexpr int sgn(std::int64_t y) noexcept { return (y > 0) - (y < 0); }

// +1 if DC > th, -1 if DC < -th, 0 inside the inclusive band [-th, th].
// DC values are the quantized Y-plane coefficients as stored in the stream.
TernaryFeature extract_feature(const jpeg::CoefficientImage& img, int th, std::string image_id);

// Throws InvalidArgument if the feature breaks a structural invariant.
void validate(const TernaryFeature& f);

// Record layout (little-endian):
//   "DCSF" | u8 version=1 | u8 flags=0 | u32 width | u32 height | u32 M |
//   u16 th | u16 id_len | id bytes | ceil(M/4) payload | u32 CRC32
// Payload packs code m into bits 2(m%4)..2(m%4)+1 of byte m/4:
// 00 = 0, 01 = +1, 10 = -1, 11 reserved. Unused trailing bits are zero.
std::vector<std::uint8_t> serialize(const TernaryFeature& f);

// Throws CorruptRecord (bad magic, version, flags, length, checksum or
// reserved code). Never returns a partial feature.
TernaryFeature deserialize(std::span<const std::uint8_t> bytes);

}  // namespace dcsign
