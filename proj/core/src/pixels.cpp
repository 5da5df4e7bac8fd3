#include "dcsign/jpeg/pixels.hpp"

#include <algorithm>
#include <cmath>

#include "dcsign/errors.hpp"
#include "dcsign/jpeg/codec.hpp"
#include "dcsign/jpeg/dct.hpp"

namespace dcsign::jpeg {

namespace {

std::uint8_t clamp_round(double v) { return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0)); }

// Single-channel working raster.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;

  Plane(int w, int h) : width(w), height(h), samples(static_cast<std::size_t>(w) * h) {}
  std::uint8_t& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
  // edge replication outside the raster
  std::uint8_t clamped(int x, int y) const { return at(std::min(x, width - 1), std::min(y, height - 1)); }
};

Component analyze(const Plane& plane, const QuantMatrix& q, std::uint8_t id, int samp) {
  Component c;
  c.id = id;
  c.h_samp = c.v_samp = samp;
  c.quant = q;
  c.blocks_wide = blocks_for(plane.width);
  c.blocks_high = blocks_for(plane.height);
  c.blocks.resize(static_cast<std::size_t>(c.blocks_wide) * c.blocks_high);
  RealBlock s{};
  for (int by = 0; by < c.blocks_high; ++by)
    for (int bx = 0; bx < c.blocks_wide; ++bx) {
      for (int y = 0; y < kBlockSize; ++y)
        for (int x = 0; x < kBlockSize; ++x)
          s[y * kBlockSize + x] = plane.clamped(bx * kBlockSize + x, by * kBlockSize + y) - 128.0;
      c.block(bx, by) = quantize(fdct(s), q);
    }
  return c;
}

// Reconstructs the full block grid (multiple of 8 in both axes).
Plane synthesize(const Component& c) {
  Plane p(c.blocks_wide * kBlockSize, c.blocks_high * kBlockSize);
  for (int by = 0; by < c.blocks_high; ++by)
    for (int bx = 0; bx < c.blocks_wide; ++bx) {
      const RealBlock s = idct(dequantize(c.block(bx, by), c.quant));
      for (int y = 0; y < kBlockSize; ++y)
        for (int x = 0; x < kBlockSize; ++x)
          p.at(bx * kBlockSize + x, by * kBlockSize + y) = clamp_round(s[y * kBlockSize + x] + 128.0);
    }
  return p;
}

Plane downsample_420(const Plane& full) {
  Plane half((full.width + 1) / 2, (full.height + 1) / 2);
  for (int y = 0; y < half.height; ++y)
    for (int x = 0; x < half.width; ++x) {
      const int sum = full.clamped(2 * x, 2 * y) + full.clamped(2 * x + 1, 2 * y) + full.clamped(2 * x, 2 * y + 1) +
                      full.clamped(2 * x + 1, 2 * y + 1);
      half.at(x, y) = static_cast<std::uint8_t>((sum + 2) / 4);
    }
  return half;
}

}  // namespace

PixelImage coefficients_to_pixels(const CoefficientImage& img) {
  validate(img);
  const Plane y = synthesize(img.components[0]);
  if (img.components.size() == 1) {
    PixelImage out(img.width, img.height, 1);
    for (int r = 0; r < img.height; ++r)
      for (int c = 0; c < img.width; ++c) out.at(c, r) = y.at(c, r);
    return out;
  }
  const Plane cb = synthesize(img.components[1]);
  const Plane cr = synthesize(img.components[2]);
  const int shift = img.subsampling == Subsampling::k420 ? 1 : 0;
  PixelImage out(img.width, img.height, 3);
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) {
      const double luma = y.at(c, r);
      const double b = cb.at(c >> shift, r >> shift) - 128.0;
      const double d = cr.at(c >> shift, r >> shift) - 128.0;
      out.at(c, r, 0) = clamp_round(luma + 1.402 * d);
      out.at(c, r, 1) = clamp_round(luma - 0.344136 * b - 0.714136 * d);
      out.at(c, r, 2) = clamp_round(luma + 1.772 * b);
    }
  return out;
}

CoefficientImage pixels_to_coefficients(const PixelImage& img, const QuantTables& tables, Subsampling subsampling) {
  if (img.width <= 0 || img.height <= 0 || img.width > 65535 || img.height > 65535)
    throw InvalidArgument("image dimensions out of range");
  if (img.samples.size() != static_cast<std::size_t>(img.width) * img.height * img.channels)
    throw InvalidArgument("pixel buffer size does not match dimensions");
  CoefficientImage out;
  out.width = img.width;
  out.height = img.height;
  if (img.channels == 1) {
    Plane gray(img.width, img.height);
    gray.samples = img.samples;
    out.subsampling = Subsampling::kNone;
    out.components.push_back(analyze(gray, tables.luma, 1, 1));
    return out;
  }
  if (img.channels != 3) throw InvalidArgument("pixel images have 1 or 3 channels");
  Plane y(img.width, img.height), cb(img.width, img.height), cr(img.width, img.height);
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) {
      const double R = img.at(c, r, 0), G = img.at(c, r, 1), B = img.at(c, r, 2);
      y.at(c, r) = clamp_round(0.299 * R + 0.587 * G + 0.114 * B);
      cb.at(c, r) = clamp_round(-0.168736 * R - 0.331264 * G + 0.5 * B + 128.0);
      cr.at(c, r) = clamp_round(0.5 * R - 0.418688 * G - 0.081312 * B + 128.0);
    }
  out.subsampling = subsampling;
  const bool sub = subsampling == Subsampling::k420;
  out.components.push_back(analyze(y, tables.luma, 1, sub ? 2 : 1));
  out.components.push_back(analyze(sub ? downsample_420(cb) : cb, tables.chroma, 2, 1));
  out.components.push_back(analyze(sub ? downsample_420(cr) : cr, tables.chroma, 3, 1));
  return out;
}

CoefficientImage pixels_to_coefficients(const PixelImage& img, QualityFactor qf, Subsampling subsampling) {
  return pixels_to_coefficients(img, quality_to_quant_matrices(qf), subsampling);
}

std::vector<std::uint8_t> recompress(std::span<const std::uint8_t> jpeg, QualityFactor qf) {
  return encode_file(pixels_to_coefficients(coefficients_to_pixels(decode_file(jpeg)), qf));
}

}  // namespace dcsign::jpeg
