#include <benchmark/benchmark.h>

#include <random>

#include "dcsign/feature.hpp"
#include "dcsign/identify.hpp"
#include "dcsign/store.hpp"

using namespace dcsign;

namespace {

jpeg::CoefficientImage random_luma(std::mt19937_64& rng, int w, int h) {
  jpeg::CoefficientImage img;
  img.width = w;
  img.height = h;
  jpeg::Component c;
  c.blocks_wide = jpeg::blocks_for(w);
  c.blocks_high = jpeg::blocks_for(h);
  c.blocks.resize(static_cast<std::size_t>(c.blocks_wide) * c.blocks_high);
  std::uniform_int_distribution<int> dc(-60, 60);
  for (auto& b : c.blocks) b.coeffs[0] = static_cast<std::int16_t>(dc(rng));
  img.components.push_back(std::move(c));
  return img;
}

void BM_Extract(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto img = random_luma(rng, 512, 384);
  for (auto _ : state) benchmark::DoNotOptimize(extract_feature(img, 14, "x"));
}
BENCHMARK(BM_Extract);

void BM_SerializeRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto f = extract_feature(random_luma(rng, 512, 384), 14, "x");
  for (auto _ : state) benchmark::DoNotOptimize(deserialize(serialize(f)));
}
BENCHMARK(BM_SerializeRoundTrip);

void BM_MatchSelf(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto img = random_luma(rng, 512, 384);
  const auto f = extract_feature(img, 14, "x");
  for (auto _ : state) benchmark::DoNotOptimize(match_feature(f, img));
}
BENCHMARK(BM_MatchSelf);

void BM_QueryStore(benchmark::State& state) {
  std::mt19937_64 rng(4);
  auto store = FeatureStore::in_memory();
  for (int i = 0; i < state.range(0); ++i)
    store.append(extract_feature(random_luma(rng, 512, 384), 14, "id" + std::to_string(i)));
  const auto query = random_luma(rng, 512, 384);
  for (auto _ : state) benchmark::DoNotOptimize(query_store(store, query));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_QueryStore)->Arg(186)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
