#include "mvrp/ga.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "mvrp/error.hpp"

namespace mvrp {

void GaParams::validate() const {
  if (population_size < 2) throw InvalidParameter("population_size must be at least 2");
  if (mating_pool_size < 1 || mating_pool_size > population_size) {
    throw InvalidParameter("mating_pool_size must lie in [1, population_size]");
  }
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
    throw InvalidParameter("crossover_prob must lie in [0, 1]");
  }
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
    throw InvalidParameter("mutation_prob must lie in [0, 1]");
  }
  if (max_generations < 1) throw InvalidParameter("max_generations must be at least 1");
}

double fitness(double length) noexcept {
  return 1.0 / std::max(length, kFitnessEpsilon);
}

Chromosome make_chromosome(std::vector<CityId> genes, CityId depot_id, const DistanceMatrix& dm) {
  Chromosome c;
  c.length = tour_length(genes, depot_id, dm);
  c.fitness = fitness(c.length);
  c.genes = std::move(genes);
  return c;
}

Population init_population(std::span<const CityId> cluster, const GaParams& params,
                           const DistanceMatrix& dm, CityId depot_id) {
  if (cluster.empty()) throw InvalidParameter("cannot build a population for an empty cluster");
  params.validate();
  Rng rng(derive_seed(params.seed, "ga-init"));
  Population population;
  population.reserve(params.population_size);
  for (std::size_t i = 0; i < params.population_size; ++i) {
    std::vector<CityId> genes(cluster.begin(), cluster.end());
    rng.shuffle(std::span<CityId>(genes));
    population.push_back(make_chromosome(std::move(genes), depot_id, dm));
  }
  return population;
}

std::vector<std::size_t> mating_pool_indices(const Population& population,
                                             const GaParams& params) {
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return population[a].fitness > population[b].fitness;
  });
  order.resize(std::min(params.mating_pool_size, order.size()));
  return order;
}

Population select_mating_pool(const Population& population, const GaParams& params) {
  Population pool;
  for (std::size_t i : mating_pool_indices(population, params)) pool.push_back(population[i]);
  return pool;
}

namespace {

std::vector<CityId> pmx_child(std::span<const CityId> base, std::span<const CityId> donor,
                              std::size_t cut1, std::size_t cut2) {
  // Position of each donor-segment gene inside the segment.
  std::unordered_map<CityId, std::size_t> in_segment;
  for (std::size_t p = cut1; p < cut2; ++p) in_segment.emplace(donor[p], p);

  std::vector<CityId> child(base.begin(), base.end());
  for (std::size_t p = cut1; p < cut2; ++p) child[p] = donor[p];
  for (std::size_t p = 0; p < base.size(); ++p) {
    if (p >= cut1 && p < cut2) continue;
    CityId gene = base[p];
    for (auto it = in_segment.find(gene); it != in_segment.end(); it = in_segment.find(gene)) {
      gene = base[it->second];
    }
    child[p] = gene;
  }
  return child;
}

}  // namespace

std::pair<std::vector<CityId>, std::vector<CityId>> pmx_crossover(
    std::span<const CityId> parent_a, std::span<const CityId> parent_b, std::size_t cut1,
    std::size_t cut2) {
  if (parent_a.size() != parent_b.size()) {
    throw InvalidParameter("PMX parents differ in length");
  }
  if (!(cut1 < cut2 && cut2 <= parent_a.size())) {
    throw InvalidParameter("PMX cuts must satisfy cut1 < cut2 <= length");
  }
  std::vector<CityId> sa(parent_a.begin(), parent_a.end());
  std::vector<CityId> sb(parent_b.begin(), parent_b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb || std::adjacent_find(sa.begin(), sa.end()) != sa.end()) {
    throw InvalidParameter("PMX parents are not permutations of the same gene set");
  }
  return {pmx_child(parent_a, parent_b, cut1, cut2), pmx_child(parent_b, parent_a, cut1, cut2)};
}

std::vector<CityId> swap_genes(std::span<const CityId> genes, std::size_t i, std::size_t j) {
  if (i >= genes.size() || j >= genes.size()) throw InvalidParameter("swap position out of range");
  std::vector<CityId> out(genes.begin(), genes.end());
  std::swap(out[i], out[j]);
  return out;
}

std::vector<CityId> mutate_swap(std::span<const CityId> genes, Rng& rng) {
  if (genes.size() < 2) return {genes.begin(), genes.end()};
  auto [i, j] = rng.distinct_pair(genes.size());
  return swap_genes(genes, i, j);
}

std::vector<CityId> mutate_inversion(std::span<const CityId> genes, Rng& rng) {
  std::vector<CityId> out(genes.begin(), genes.end());
  if (out.size() < 2) return out;
  auto [i, j] = rng.distinct_pair(out.size());
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(i),
               out.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return out;
}

Population evolve_generation(Population population, const GaParams& params,
                             const DistanceMatrix& dm, CityId depot_id, Rng& rng) {
  if (population.empty()) return population;
  const std::vector<std::size_t> pool = mating_pool_indices(population, params);
  const std::size_t genes = population[pool.front()].genes.size();

  for (std::size_t t = 0; t + 1 < pool.size(); ++t) {
    if (!rng.bernoulli(params.crossover_prob) || genes < 2) continue;
    // Cut points are positions 0..genes; distinct_pair gives cut1 < cut2.
    auto [cut1, cut2] = rng.distinct_pair(genes + 1);
    Chromosome& a = population[pool[t]];
    Chromosome& b = population[pool[t + 1]];
    auto [child_a, child_b] = pmx_crossover(a.genes, b.genes, cut1, cut2);
    Chromosome ca = make_chromosome(std::move(child_a), depot_id, dm);
    Chromosome cb = make_chromosome(std::move(child_b), depot_id, dm);
    if (ca.fitness > a.fitness) a = std::move(ca);
    if (cb.fitness > b.fitness) b = std::move(cb);
  }

  for (std::size_t idx : pool) {
    if (!rng.bernoulli(params.mutation_prob)) continue;
    Chromosome& c = population[idx];
    std::vector<CityId> mutant = params.mutation == MutationOp::kSwap
                                     ? mutate_swap(c.genes, rng)
                                     : mutate_inversion(c.genes, rng);
    Chromosome m = make_chromosome(std::move(mutant), depot_id, dm);
    if (m.length <= c.length) c = std::move(m);
  }

  // Slots outside the pool are refilled with fresh random tours.
  std::vector<bool> in_pool(population.size(), false);
  for (std::size_t idx : pool) in_pool[idx] = true;
  for (std::size_t idx = 0; idx < population.size(); ++idx) {
    if (in_pool[idx]) continue;
    std::vector<CityId> genes_copy = population[idx].genes;
    rng.shuffle(std::span<CityId>(genes_copy));
    population[idx] = make_chromosome(std::move(genes_copy), depot_id, dm);
  }
  return population;
}

namespace {

TraceRow summarize(const Population& population, std::size_t generation) {
  double best = population.front().length;
  double sum = 0.0;
  for (const Chromosome& c : population) {
    best = std::min(best, c.length);
    sum += c.length;
  }
  return {generation, best, sum / static_cast<double>(population.size())};
}

}  // namespace

TourResult run_ga(std::span<const CityId> cluster, const GaParams& params,
                  const DistanceMatrix& dm, CityId depot_id) {
  if (cluster.empty()) throw InvalidParameter("cannot run the GA on an empty cluster");
  params.validate();
  Population population = init_population(cluster, params, dm, depot_id);
  Rng rng(derive_seed(params.seed, "ga-evolve"));

  const std::size_t generations = cluster.size() <= 2 ? 1 : params.max_generations;
  TourResult result;
  double best = summarize(population, 0).best_length;
  std::size_t stall = 0;
  for (std::size_t g = 1; g <= generations; ++g) {
    population = evolve_generation(std::move(population), params, dm, depot_id, rng);
    const TraceRow row = summarize(population, g);
    result.trace.push_back(row);
    if (row.best_length < best) {
      best = row.best_length;
      stall = 0;
    } else if (params.stall_generations > 0 && ++stall >= params.stall_generations) {
      break;
    }
  }

  const auto fittest = mating_pool_indices(population, params).front();
  result.tour = population[fittest].genes;
  result.length = population[fittest].length;
  return result;
}

}  // namespace mvrp
