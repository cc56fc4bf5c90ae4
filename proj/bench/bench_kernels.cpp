// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "growthlab/complexity.hpp"
#include "growthlab/random_words.hpp"
#include "growthlab/segments.hpp"
#include "growthlab/traverse_batch.hpp"

using namespace growthlab;

namespace {

struct Batch {
  TraverseContext ctx;
  std::vector<GenWord> words;
};

const Batch& batch() {
  static const Batch b = [] {
    Batch out{default_context("grigorchuk", 10000, 8), {}};
    out.words = random_words(64, 10000, out.ctx.generators, 1);
    return out;
  }();
  return b;
}

const ChainCode& ray_code() {
  static const ChainCode code(segment_ray("golden_mean", 1 << 13));
  return code;
}

void BM_CountSerial(benchmark::State& state) {
  const auto& b = batch();
  for (auto _ : state) benchmark::DoNotOptimize(count_batch_serial(b.ctx, b.words));
  state.SetItemsProcessed(state.iterations() * b.words.size());
}

void BM_CountParallel(benchmark::State& state) {
  const auto& b = batch();
  for (auto _ : state) benchmark::DoNotOptimize(count_batch_parallel(b.ctx, b.words));
  state.SetItemsProcessed(state.iterations() * b.words.size());
}

void BM_BallProfileSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ball_class_profile_serial(ray_code(), 10, 200));
}

void BM_BallProfileParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ball_class_profile(ray_code(), 10, 200));
}

}  // namespace

BENCHMARK(BM_CountSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BallProfileSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BallProfileParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
