#include "dcsign/feature.hpp"

#include <algorithm>
#include <string>

#include "dcsign/crc32.hpp"
#include "dcsign/errors.hpp"

namespace dcsign {

namespace {

constexpr std::uint8_t kMagic[4] = {'D', 'C', 'S', 'F'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kFixedHeader = 4 + 1 + 1 + 4 + 4 + 4 + 2 + 2;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | static_cast<std::uint32_t>(b[at + 1]) << 8 |
         static_cast<std::uint32_t>(b[at + 2]) << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

std::size_t expected_blocks(std::uint64_t width, std::uint64_t height) {
  return static_cast<std::size_t>(((width + 7) / 8) * ((height + 7) / 8));
}

}  // namespace

TernaryFeature extract_feature(const jpeg::CoefficientImage& img, int th, std::string image_id) {
  if (th < 0 || th > kMaxThreshold) throw InvalidArgument("threshold must be in [0, 65535]");
  if (img.components.empty()) throw InvalidArgument("image has no Y plane");
  TernaryFeature f;
  f.image_id = std::move(image_id);
  f.width = img.width;
  f.height = img.height;
  f.th = th;
  const auto& y = img.luma();
  f.codes.reserve(y.blocks.size());
  for (const auto& b : y.blocks) {
    const int dc = b.dc();
    f.codes.push_back(static_cast<std::int8_t>(dc > th ? 1 : dc < -th ? -1 : 0));
  }
  return f;
}

void validate(const TernaryFeature& f) {
  if (f.width <= 0 || f.height <= 0) throw InvalidArgument("feature dimensions must be positive");
  if (f.th < 0 || f.th > kMaxThreshold) throw InvalidArgument("feature threshold out of range");
  if (f.image_id.size() > 0xFFFF) throw InvalidArgument("image id longer than 65535 bytes");
  if (f.codes.size() != expected_blocks(f.width, f.height))
    throw InvalidArgument("feature code count does not match dimensions");
  for (auto c : f.codes)
    if (c < -1 || c > 1) throw InvalidArgument("feature code outside {-1,0,+1}");
}

std::vector<std::uint8_t> serialize(const TernaryFeature& f) {
  validate(f);
  const std::size_t m = f.codes.size();
  std::vector<std::uint8_t> out;
  out.reserve(kFixedHeader + f.image_id.size() + (m + 3) / 4 + 4);
  for (auto b : kMagic) out.push_back(b);
  out.push_back(kVersion);
  out.push_back(0);
  put_u32(out, static_cast<std::uint32_t>(f.width));
  put_u32(out, static_cast<std::uint32_t>(f.height));
  put_u32(out, static_cast<std::uint32_t>(m));
  put_u16(out, static_cast<std::uint16_t>(f.th));
  put_u16(out, static_cast<std::uint16_t>(f.image_id.size()));
  out.insert(out.end(), f.image_id.begin(), f.image_id.end());
  const std::size_t payload_at = out.size();
  out.resize(payload_at + (m + 3) / 4, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint8_t bits = f.codes[i] == 1 ? 0b01 : f.codes[i] == -1 ? 0b10 : 0b00;
    out[payload_at + i / 4] |= static_cast<std::uint8_t>(bits << (2 * (i % 4)));
  }
  put_u32(out, crc32(out));
  return out;
}

TernaryFeature deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin()))
    throw CorruptRecord(RecordFault::kBadMagic, "expected \"DCSF\"");
  if (bytes.size() < kFixedHeader + 4) throw CorruptRecord(RecordFault::kLengthMismatch, "record shorter than header");
  if (bytes[4] != kVersion)
    throw CorruptRecord(RecordFault::kVersionMismatch, "version " + std::to_string(bytes[4]));
  if (bytes[5] != 0) throw CorruptRecord(RecordFault::kBadFlags, "flags " + std::to_string(bytes[5]));
  const std::uint32_t width = get_u32(bytes, 6);
  const std::uint32_t height = get_u32(bytes, 10);
  const std::uint32_t m = get_u32(bytes, 14);
  const std::uint16_t th = get_u16(bytes, 18);
  const std::uint16_t id_len = get_u16(bytes, 20);
  if (width == 0 || height == 0 || width > 0x7fffffff || height > 0x7fffffff || m != expected_blocks(width, height))
    throw CorruptRecord(RecordFault::kLengthMismatch, "block count disagrees with dimensions");
  const std::size_t payload_at = kFixedHeader + id_len;
  const std::uint64_t total = static_cast<std::uint64_t>(payload_at) + (static_cast<std::uint64_t>(m) + 3) / 4 + 4;
  if (bytes.size() != total)
    throw CorruptRecord(RecordFault::kLengthMismatch,
                        "expected " + std::to_string(total) + " bytes, got " + std::to_string(bytes.size()));
  const std::uint32_t stored_crc = get_u32(bytes, bytes.size() - 4);
  if (crc32(bytes.first(bytes.size() - 4)) != stored_crc) throw CorruptRecord(RecordFault::kChecksum, "");

  TernaryFeature f;
  f.width = static_cast<int>(width);
  f.height = static_cast<int>(height);
  f.th = th;
  f.image_id.assign(reinterpret_cast<const char*>(bytes.data() + kFixedHeader), id_len);
  f.codes.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int bits = (bytes[payload_at + i / 4] >> (2 * (i % 4))) & 0b11;
    if (bits == 0b11) throw CorruptRecord(RecordFault::kReservedCode, "at block " + std::to_string(i));
    f.codes[i] = static_cast<std::int8_t>(bits == 0b01 ? 1 : bits == 0b10 ? -1 : 0);
  }
  if (m % 4 != 0 && (bytes[payload_at + m / 4] >> (2 * (m % 4))) != 0)
    throw CorruptRecord(RecordFault::kReservedCode, "nonzero padding bits after last code");
  return f;
}

}  // namespace dcsign
