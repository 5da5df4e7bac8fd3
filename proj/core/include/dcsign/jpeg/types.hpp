#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dcsign::jpeg {

inline constexpr int kBlockSize = 8;
inline constexpr int kBlockArea = 64;

// JPEG quality factor, always in [1, 100].
class QualityFactor {
 public:
  explicit QualityFactor(int value);
  int value() const noexcept { return value_; }
  friend auto operator<=>(const QualityFactor&, const QualityFactor&) = default;

 private:
  int value_;
};

// 8x8 quantizer step sizes in natural (row = v, column = u) order.
// Entries are in [1, 255].
class QuantMatrix {
 public:
  QuantMatrix() { entries_.fill(1); }
  explicit QuantMatrix(const std::array<std::uint16_t, kBlockArea>& entries);
  std::uint16_t operator[](std::size_t i) const noexcept { return entries_[i]; }
  std::uint16_t at(int row, int col) const noexcept { return entries_[row * kBlockSize + col]; }
  const std::array<std::uint16_t, kBlockArea>& entries() const noexcept { return entries_; }
  friend bool operator==(const QuantMatrix&, const QuantMatrix&) = default;

 private:
  std::array<std::uint16_t, kBlockArea> entries_;
};

// Quantized coefficients of one block in natural order; index 0 is DC.
struct CoefficientBlock {
  std::array<std::int16_t, kBlockArea> coeffs{};

  std::int16_t dc() const noexcept { return coeffs[0]; }
  friend bool operator==(const CoefficientBlock&, const CoefficientBlock&) = default;
};

enum class Subsampling { kNone, k420 };

struct Component {
  std::uint8_t id = 1;
  int h_samp = 1;
  int v_samp = 1;
  QuantMatrix quant;
  int blocks_wide = 0;
  int blocks_high = 0;
  std::vector<CoefficientBlock> blocks;  // row-major, blocks_wide * blocks_high

  const CoefficientBlock& block(int bx, int by) const { return blocks[static_cast<std::size_t>(by) * blocks_wide + bx]; }
  CoefficientBlock& block(int bx, int by) { return blocks[static_cast<std::size_t>(by) * blocks_wide + bx]; }
  friend bool operator==(const Component&, const Component&) = default;
};

// Quantized DCT planes of a JPEG image: one component (gray) or three (YCbCr).
// Each plane covers ceil(component size / 8) blocks per axis; MCU padding
// blocks that exist only in the entropy-coded stream are not kept.
struct CoefficientImage {
  int width = 0;
  int height = 0;
  Subsampling subsampling = Subsampling::kNone;
  std::vector<Component> components;

  const Component& luma() const { return components.at(0); }
  // Number of blocks in the Y plane.
  std::size_t block_count() const { return luma().blocks.size(); }
  friend bool operator==(const CoefficientImage&, const CoefficientImage&) = default;
};

// Throws InvalidArgument when plane geometry disagrees with the image size.
void validate(const CoefficientImage& img);

// Interleaved 8-bit raster, gray (1 channel) or RGB (3 channels).
struct PixelImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> samples;

  PixelImage() = default;
  PixelImage(int w, int h, int c);

  std::uint8_t& at(int x, int y, int c = 0) {
    return samples[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c = 0) const {
    return samples[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  friend bool operator==(const PixelImage&, const PixelImage&) = default;
};

inline int blocks_for(int samples) { return (samples + kBlockSize - 1) / kBlockSize; }

}  // namespace dcsign::jpeg
