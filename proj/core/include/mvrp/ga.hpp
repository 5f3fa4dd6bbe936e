#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mvrp/instance.hpp"
#include "mvrp/rng.hpp"
#include "mvrp/trace.hpp"

namespace mvrp {

enum class MutationOp {
  kSwap,       // exchange two positions
  kInversion,  // reverse the segment between two positions
};

struct GaParams {
  std::size_t population_size = 10;
  std::size_t mating_pool_size = 7;
  double crossover_prob = 0.8;
  double mutation_prob = 0.1;
  std::size_t max_generations = 300;
  /// Stop after this many generations without a strict improvement of the
  /// best length. Zero disables the rule.
  std::size_t stall_generations = 50;
  std::uint64_t seed = 0;
  MutationOp mutation = MutationOp::kSwap;

  /// Throws InvalidParameter.
  void validate() const;
};

/// Lengths at or below this are clamped before inversion.
inline constexpr double kFitnessEpsilon = 1e-12;

/// 1 / length, with length clamped below at kFitnessEpsilon.
double fitness(double length) noexcept;

struct Chromosome {
  std::vector<CityId> genes;
  double length = 0.0;
  double fitness = 0.0;
};

Chromosome make_chromosome(std::vector<CityId> genes, CityId depot_id, const DistanceMatrix& dm);

using Population = std::vector<Chromosome>;

/// population_size uniformly random permutations of the cluster, drawn from
/// derive_seed(params.seed, "ga-init").
Population init_population(std::span<const CityId> cluster, const GaParams& params,
                           const DistanceMatrix& dm, CityId depot_id);

/// Indices of the mating_pool_size fittest chromosomes, fittest first;
/// equal fitness keeps population order.
std::vector<std::size_t> mating_pool_indices(const Population& population,
                                             const GaParams& params);
Population select_mating_pool(const Population& population, const GaParams& params);

/// Partially matched crossover. child.first carries parent_b's genes on
/// [cut1, cut2) and parent_a's elsewhere, with clashes resolved through the
/// segment's position-wise mapping; child.second is the mirror image.
std::pair<std::vector<CityId>, std::vector<CityId>> pmx_crossover(
    std::span<const CityId> parent_a, std::span<const CityId> parent_b, std::size_t cut1,
    std::size_t cut2);

std::vector<CityId> swap_genes(std::span<const CityId> genes, std::size_t i, std::size_t j);
std::vector<CityId> mutate_swap(std::span<const CityId> genes, Rng& rng);
std::vector<CityId> mutate_inversion(std::span<const CityId> genes, Rng& rng);

/// One generation, in place on the population slots:
///  1. rank and take the mating pool;
///  2. cross each pool member with the next fittest (pairs (1,2), (2,3), ...)
///     with probability crossover_prob; a child replaces its parent only if
///     strictly fitter;
///  3. mutate each pool member with probability mutation_prob, keeping the
///     mutant only if it is no longer than before.
/// Slots outside the pool are then refilled with fresh random tours. The
/// fittest chromosome is always in the pool, so the best length never
/// increases.
Population evolve_generation(Population population, const GaParams& params,
                             const DistanceMatrix& dm, CityId depot_id, Rng& rng);

/// Evolve until max_generations or stall_generations without improvement.
/// Clusters of one or two cities have a single tour up to reversal and stop
/// after one generation. Generations draw from
/// derive_seed(params.seed, "ga-evolve").
TourResult run_ga(std::span<const CityId> cluster, const GaParams& params,
                  const DistanceMatrix& dm, CityId depot_id);

}  // namespace mvrp
