#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dcsign/jpeg/quant_tables.hpp"
#include "dcsign/jpeg/types.hpp"

namespace dcsign::jpeg {

// Decoder-side reconstruction: dequantize, IDCT, +128, round, clamp to
// [0,255]; nearest-neighbour chroma upsampling and full-range JFIF
// YCbCr -> RGB for three-component images. Padding beyond width/height is
// dropped. The rounding and clamping here are what make re-compression lossy
// even at an identical quantizer.
PixelImage coefficients_to_pixels(const CoefficientImage& img);

// Encoder-side analysis: JFIF RGB -> YCbCr (rounded, clamped), optional
// 2x2 box-average chroma downsampling, edge-replicated padding to the block
// grid, level shift, FDCT, quantization. Gray input yields one component.
CoefficientImage pixels_to_coefficients(const PixelImage& img, const QuantTables& tables,
                                        Subsampling subsampling = Subsampling::k420);
CoefficientImage pixels_to_coefficients(const PixelImage& img, QualityFactor qf,
                                        Subsampling subsampling = Subsampling::k420);

// Decode, reconstruct pixels, re-encode at `qf`. Dimensions are preserved.
std::vector<std::uint8_t> recompress(std::span<const std::uint8_t> jpeg, QualityFactor qf);

}  // namespace dcsign::jpeg
