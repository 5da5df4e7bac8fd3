#include "dcsign/identify.hpp"

#include "dcsign/errors.hpp"
#include "dcsign/parallel.hpp"

namespace dcsign {

Verdict match_feature(const TernaryFeature& feature, const jpeg::CoefficientImage& query) {
  if (query.components.empty()) throw InvalidArgument("query has no Y plane");
  if (query.width != feature.width || query.height != feature.height) return {false, 0};
  const auto& blocks = query.luma().blocks;
  if (blocks.size() != feature.codes.size()) return {false, 0};
  for (std::size_t m = 0; m < blocks.size(); ++m) {
    const int enrolled = feature.codes[m];
    const int observed = sgn(blocks[m].dc());
    if (enrolled == 0 || observed == 0) continue;
    if (enrolled != observed) return {false, m};
  }
  return {true, std::nullopt};
}

std::vector<std::string> query_store(const FeatureStore& store, const jpeg::CoefficientImage& query) {
  const auto& records = store.records();
  std::vector<char> hit(records.size(), 0);
  auto check = [&](std::size_t i) { hit[i] = match_feature(records[i], query).matched; };
  // small stores are cheaper to scan inline than to fan out
  if (records.size() < 512) {
    for (std::size_t i = 0; i < records.size(); ++i) check(i);
  } else {
    parallel_for(records.size(), check);
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (hit[i]) ids.push_back(records[i].image_id);
  return ids;
}

}  // namespace dcsign
