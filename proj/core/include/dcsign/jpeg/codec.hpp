#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dcsign/jpeg/types.hpp"

namespace dcsign::jpeg {

// Parses a baseline (SOF0) Huffman-coded JFIF stream into its quantized
// coefficient planes. Restart markers, multi-scan sequential streams and
// APPn/COM segments are accepted.
//
// Throws UnsupportedFormat for progressive, lossless, arithmetic-coded,
// hierarchical or 12-bit streams and for sampling layouts other than
// gray, 4:4:4 and 4:2:0; CorruptStream for truncated or malformed data.
CoefficientImage decode_file(std::span<const std::uint8_t> bytes);

// Emits a baseline JFIF stream with the image's quantizers and the Annex K
// Huffman tables. No restart markers. decode_file(encode_file(img)) == img.
std::vector<std::uint8_t> encode_file(const CoefficientImage& img);

}  // namespace dcsign::jpeg
