#include "dcsign/calibrate.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "dcsign/errors.hpp"
#include "dcsign/feature.hpp"
#include "dcsign/jpeg/codec.hpp"
#include "dcsign/jpeg/pixels.hpp"
#include "dcsign/parallel.hpp"

namespace dcsign {

InversionStats count_inversions(const jpeg::CoefficientImage& single, const jpeg::CoefficientImage& dbl) {
  const auto& a = single.luma().blocks;
  const auto& b = dbl.luma().blocks;
  if (a.size() != b.size()) throw InvalidArgument("images have different block grids");
  InversionStats s;
  for (std::size_t m = 0; m < a.size(); ++m) {
    const int s1 = sgn(a[m].dc());
    const int s2 = sgn(b[m].dc());
    if (s1 != 0 && s2 != 0 && s1 != s2) {
      ++s.count;
      s.max_magnitude = std::max(s.max_magnitude, std::abs(static_cast<int>(a[m].dc())));
    }
  }
  return s;
}

CalibrationReport calibrate_threshold(std::span<const jpeg::PixelImage> corpus,
                                      std::span<const jpeg::QualityFactor> qf_singles,
                                      std::span<const jpeg::QualityFactor> qf_doubles) {
  if (corpus.empty()) throw InvalidArgument("calibration corpus is empty");
  if (qf_singles.empty() || qf_doubles.empty()) throw InvalidArgument("calibration QF sets must be non-empty");

  CalibrationReport r;
  r.corpus_size = corpus.size();
  for (auto q : qf_singles) r.qf_singles.push_back(q.value());
  for (auto q : qf_doubles) r.qf_doubles.push_back(q.value());

  const std::size_t ns = qf_singles.size();
  const std::size_t nd = qf_doubles.size();
  // one task per (image, qf_single); the single-compressed stream is shared
  // by all second-stage qualities
  std::vector<InversionStats> per_task(corpus.size() * ns * nd);
  parallel_for(corpus.size() * ns, [&](std::size_t task) {
    const std::size_t img = task / ns;
    const std::size_t s = task % ns;
    const auto single = jpeg::pixels_to_coefficients(corpus[img], qf_singles[s]);
    const auto single_bytes = jpeg::encode_file(single);
    for (std::size_t d = 0; d < nd; ++d) {
      const auto dbl = jpeg::decode_file(jpeg::recompress(single_bytes, qf_doubles[d]));
      per_task[(img * ns + s) * nd + d] = count_inversions(single, dbl);
    }
  });

  r.cells.resize(ns * nd);
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t d = 0; d < nd; ++d) {
      auto& cell = r.cells[s * nd + d];
      cell.qf_single = r.qf_singles[s];
      cell.qf_double = r.qf_doubles[d];
    }
  for (std::size_t img = 0; img < corpus.size(); ++img)
    for (std::size_t c = 0; c < ns * nd; ++c) {
      const auto& t = per_task[img * ns * nd + c];
      auto& cell = r.cells[c].stats;
      cell.count += t.count;
      cell.max_magnitude = std::max(cell.max_magnitude, t.max_magnitude);
    }
  for (const auto& cell : r.cells) {
    r.inversion_count += cell.stats.count;
    r.max_inverting_magnitude = std::max(r.max_inverting_magnitude, cell.stats.max_magnitude);
  }
  r.recommended_th = r.inversion_count == 0 ? 0 : r.max_inverting_magnitude + 1;
  return r;
}

std::string format_calibration_table(const CalibrationReport& r) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "corpus images: %zu\n", r.corpus_size);
  out += line;
  out += "qf_single  qf_double  inversions  max_magnitude\n";
  for (const auto& c : r.cells) {
    std::snprintf(line, sizeof line, "%9d  %9d  %10llu  %13d\n", c.qf_single, c.qf_double,
                  static_cast<unsigned long long>(c.stats.count), c.stats.max_magnitude);
    out += line;
  }
  return out;
}

std::string format_calibration_keys(const CalibrationReport& r) {
  return "inversions=" + std::to_string(r.inversion_count) + "\nmax_magnitude=" +
         std::to_string(r.max_inverting_magnitude) + "\nrecommended_th=" + std::to_string(r.recommended_th) + "\n";
}

}  // namespace dcsign
