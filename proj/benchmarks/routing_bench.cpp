#include <benchmark/benchmark.h>

#include <numeric>

#include "mvrp/baselines.hpp"
#include "mvrp/exact.hpp"
#include "mvrp/ga.hpp"
#include "mvrp/instance.hpp"

namespace {

using namespace mvrp;

// A depot plus `m` customers, roughly one paper-sized cluster when m = 30.
struct Fixture {
  explicit Fixture(std::size_t m)
      : inst(generate_random_instance(m + 1, 35.0, 1, 7)), dm(inst), cluster(inst.customer_ids()) {}
  Instance inst;
  DistanceMatrix dm;
  std::vector<CityId> cluster;
};

void BM_TourLength(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tour_length(f.cluster, 1, f.dm));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TourLength)->Arg(30)->Arg(180);

void BM_Pmx(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<CityId> a(n), b(n);
  std::iota(a.begin(), a.end(), 1);
  std::iota(b.rbegin(), b.rend(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pmx_crossover(a, b, n / 3, 2 * n / 3));
}
BENCHMARK(BM_Pmx)->Arg(30)->Arg(180);

void BM_RunGa(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  GaParams p;
  p.stall_generations = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_ga(f.cluster, p, f.dm, 1));
}
BENCHMARK(BM_RunGa)->Arg(8)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_SimulatedAnnealing(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simulated_annealing(f.cluster, {}, f.dm, 1));
}
BENCHMARK(BM_SimulatedAnnealing)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_TabuSearch(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tabu_search(f.cluster, {}, f.dm, 1));
}
BENCHMARK(BM_TabuSearch)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_tsp(f.cluster, f.dm, 1));
}
BENCHMARK(BM_BruteForce)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
