#include <benchmark/benchmark.h>

#include <cmath>

#include "dcsign/jpeg/codec.hpp"
#include "dcsign/jpeg/pixels.hpp"

using namespace dcsign::jpeg;

namespace {

PixelImage test_card(int side) {
  PixelImage img(side, side, 3);
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) {
      img.at(x, y, 0) = static_cast<std::uint8_t>(128 + 100 * std::sin(x * 0.05));
      img.at(x, y, 1) = static_cast<std::uint8_t>((x ^ y) & 0xFF);
      img.at(x, y, 2) = static_cast<std::uint8_t>(128 + 90 * std::cos(y * 0.03 + x * 0.01));
    }
  return img;
}

void BM_Analyze(benchmark::State& state) {
  const auto img = test_card(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pixels_to_coefficients(img, QualityFactor(85)));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Analyze)->Arg(256)->Arg(512);

void BM_Encode(benchmark::State& state) {
  const auto c = pixels_to_coefficients(test_card(static_cast<int>(state.range(0))), QualityFactor(85));
  for (auto _ : state) benchmark::DoNotOptimize(encode_file(c));
}
BENCHMARK(BM_Encode)->Arg(256)->Arg(512);

void BM_Decode(benchmark::State& state) {
  const auto bytes = encode_file(pixels_to_coefficients(test_card(static_cast<int>(state.range(0))), QualityFactor(85)));
  for (auto _ : state) benchmark::DoNotOptimize(decode_file(bytes));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_Decode)->Arg(256)->Arg(512);

void BM_Recompress(benchmark::State& state) {
  const auto bytes = encode_file(pixels_to_coefficients(test_card(static_cast<int>(state.range(0))), QualityFactor(95)));
  for (auto _ : state) benchmark::DoNotOptimize(recompress(bytes, QualityFactor(75)));
}
BENCHMARK(BM_Recompress)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
