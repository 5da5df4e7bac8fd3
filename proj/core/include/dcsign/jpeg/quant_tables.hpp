#pragma once

#include <array>
#include <cstdint>

#include "dcsign/jpeg/types.hpp"

namespace dcsign::jpeg {

// ITU-T T.81 Annex K example tables (K.1 luminance, K.2 chrominance),
// natural order.
extern const std::array<std::uint16_t, kBlockArea> kBaseLumaTable;
extern const std::array<std::uint16_t, kBlockArea> kBaseChromaTable;

struct QuantTables {
  QuantMatrix luma;
  QuantMatrix chroma;
};

// IJG quality scaling: scale = 5000/qf below 50, 200 - 2qf otherwise;
// entry = clamp((base * scale + 50) / 100, 1, 255).
QuantTables quality_to_quant_matrices(QualityFactor qf);

// Zigzag scan position k -> natural index.
extern const std::array<std::uint8_t, kBlockArea> kZigzagToNatural;

}  // namespace dcsign::jpeg
