#include "dcsign/jpeg/types.hpp"

#include <string>

#include "dcsign/errors.hpp"

namespace dcsign::jpeg {

QualityFactor::QualityFactor(int value) : value_(value) {
  if (value < 1 || value > 100)
    throw InvalidArgument("quality factor must be in [1,100], got " + std::to_string(value));
}

QuantMatrix::QuantMatrix(const std::array<std::uint16_t, kBlockArea>& entries) : entries_(entries) {
  for (auto e : entries_)
    if (e < 1 || e > 255) throw InvalidArgument("quantizer entry out of [1,255]: " + std::to_string(e));
}

PixelImage::PixelImage(int w, int h, int c) : width(w), height(h), channels(c) {
  if (w <= 0 || h <= 0) throw InvalidArgument("image dimensions must be positive");
  if (c != 1 && c != 3) throw InvalidArgument("pixel images have 1 or 3 channels");
  samples.assign(static_cast<std::size_t>(w) * h * c, 0);
}

void validate(const CoefficientImage& img) {
  if (img.width <= 0 || img.height <= 0 || img.width > 65535 || img.height > 65535)
    throw InvalidArgument("image dimensions out of range");
  const auto n = img.components.size();
  if (n != 1 && n != 3) throw InvalidArgument("images have 1 or 3 components");
  if (n == 1 && img.subsampling != Subsampling::kNone)
    throw InvalidArgument("grayscale images cannot be subsampled");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = img.components[i];
    const bool chroma_sub = i > 0 && img.subsampling == Subsampling::k420;
    const int w = chroma_sub ? (img.width + 1) / 2 : img.width;
    const int h = chroma_sub ? (img.height + 1) / 2 : img.height;
    if (c.blocks_wide != blocks_for(w) || c.blocks_high != blocks_for(h) ||
        c.blocks.size() != static_cast<std::size_t>(c.blocks_wide) * c.blocks_high)
      throw InvalidArgument("component " + std::to_string(i) + " plane size does not match image geometry");
    const int expect_samp = (img.subsampling == Subsampling::k420 && i == 0) ? 2 : 1;
    if (c.h_samp != expect_samp || c.v_samp != expect_samp)
      throw InvalidArgument("component " + std::to_string(i) + " sampling factors disagree with subsampling mode");
  }
}

}  // namespace dcsign::jpeg
