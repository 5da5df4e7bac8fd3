#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dcsign/feature.hpp"
#include "dcsign/jpeg/types.hpp"
#include "dcsign/store.hpp"

namespace dcsign {

struct Verdict {
  bool matched = false;
  std::optional<std::size_t> mismatch_block;  // set iff !matched

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Walks the Y blocks in raster order. A block is skipped when the enrolled
// code is 0 or the query's quantized DC is 0; the first block where both are
// nonzero and the signs differ ends the walk with a mismatch. A query whose
// dimensions differ from the feature's is rejected at block 0.
//
// Note the asymmetry: the enrolled side went through the threshold band, the
// query side uses the raw sign. An all-zero query or an all-zero feature
// therefore matches everything.
Verdict match_feature(const TernaryFeature& feature, const jpeg::CoefficientImage& query);

// Ids of every enrolled feature that matches, in enrollment order.
std::vector<std::string> query_store(const FeatureStore& store, const jpeg::CoefficientImage& query);

}  // namespace dcsign
