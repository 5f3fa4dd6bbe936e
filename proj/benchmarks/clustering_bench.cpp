#include <benchmark/benchmark.h>

#include "mvrp/clustering.hpp"
#include "mvrp/instance.hpp"

namespace {

void BM_KMeans(benchmark::State& state) {
  const auto inst = mvrp::generate_random_instance(static_cast<std::size_t>(state.range(0)), 35.0, 1, 3);
  mvrp::KMeansParams p;
  for (auto _ : state) benchmark::DoNotOptimize(mvrp::kmeans(inst, p));
}
BENCHMARK(BM_KMeans)->Arg(180)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_DistanceMatrix(benchmark::State& state) {
  const auto inst = mvrp::generate_random_instance(static_cast<std::size_t>(state.range(0)), 35.0, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mvrp::DistanceMatrix(inst));
}
BENCHMARK(BM_DistanceMatrix)->Arg(180)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
