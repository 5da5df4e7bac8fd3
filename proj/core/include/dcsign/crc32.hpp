#pragma once

#include <cstdint>
#include <span>

namespace dcsign {

// CRC-32 (IEEE 802.3, reflected, as used by zlib/PNG).
std::uint32_t crc32(std::span<const std::uint8_t> bytes);

}  // namespace dcsign
