#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace dcsign::jpeg::detail {

// A DHT table as it appears on the wire: code counts per length 1..16 and
// symbol values in code order.
struct HuffmanSpec {
  std::array<std::uint8_t, 16> counts{};
  std::vector<std::uint8_t> symbols;
};

// Annex K typical tables (K.3-K.6).
const HuffmanSpec& std_dc_luma();
const HuffmanSpec& std_ac_luma();
const HuffmanSpec& std_dc_chroma();
const HuffmanSpec& std_ac_chroma();

struct HuffmanEncoder {
  std::array<std::uint16_t, 256> code{};
  std::array<std::uint8_t, 256> length{};  // 0 = symbol absent

  explicit HuffmanEncoder(const HuffmanSpec& spec);
};

// Canonical decoder per T.81 F.2.2.3 (mincode/maxcode/valptr per length).
struct HuffmanDecoder {
  std::array<std::int32_t, 17> mincode{};
  std::array<std::int32_t, 18> maxcode{};
  std::array<std::int32_t, 17> valptr{};
  std::vector<std::uint8_t> symbols;
  bool defined = false;

  HuffmanDecoder() = default;
  explicit HuffmanDecoder(const HuffmanSpec& spec);
};

}  // namespace dcsign::jpeg::detail
