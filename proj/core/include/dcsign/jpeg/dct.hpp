#pragma once

#include <array>
#include <span>

#include "dcsign/jpeg/types.hpp"

namespace dcsign::jpeg {

using RealBlock = std::array<double, kBlockArea>;

// Orthonormal 2-D DCT-II over level-shifted samples; a constant block of
// value c yields DC = 8c. Double precision, separable.
RealBlock fdct(const RealBlock& samples);
RealBlock idct(const RealBlock& coeffs);

// round(S / Q) with halves rounded away from zero.
CoefficientBlock quantize(const RealBlock& coeffs, const QuantMatrix& q);
RealBlock dequantize(const CoefficientBlock& block, const QuantMatrix& q);

}  // namespace dcsign::jpeg
