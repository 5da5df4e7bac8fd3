#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dcsign/jpeg/types.hpp"

namespace dcsign {

struct InversionStats {
  std::uint64_t count = 0;
  int max_magnitude = 0;  // max |DC| on the single-compressed side; 0 if none
};

// Strict DC sign flips between a single-compressed image and its
// double-compressed descendant. Blocks where either side is 0 do not count.
InversionStats count_inversions(const jpeg::CoefficientImage& single, const jpeg::CoefficientImage& dbl);

struct CalibrationCell {
  int qf_single = 0;
  int qf_double = 0;
  InversionStats stats;
};

struct CalibrationReport {
  std::vector<int> qf_singles;
  std::vector<int> qf_doubles;
  std::size_t corpus_size = 0;
  std::uint64_t inversion_count = 0;
  int max_inverting_magnitude = 0;
  int recommended_th = 0;  // max_inverting_magnitude + 1, or 0 without inversions
  std::vector<CalibrationCell> cells;  // one per (qf_single, qf_double), row-major
};

// For every image and QF pair: C1 = analyze(image, qf1),
// C2 = decode(recompress(encode(C1), qf2)); collects the sign flips of C2
// against C1. Work is spread over worker_count() threads; the reduction is
// order-independent.
CalibrationReport calibrate_threshold(std::span<const jpeg::PixelImage> corpus,
                                      std::span<const jpeg::QualityFactor> qf_singles,
                                      std::span<const jpeg::QualityFactor> qf_doubles);

std::string format_calibration_table(const CalibrationReport& report);
// "inversions=N\nmax_magnitude=N\nrecommended_th=N\n"
std::string format_calibration_keys(const CalibrationReport& report);

}  // namespace dcsign
