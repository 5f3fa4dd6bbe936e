#include "mvrp/ga.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mvrp/error.hpp"
#include "test_support.hpp"

namespace mvrp {
namespace {

TEST(Fitness, InverseLengthWithClamp) {
  EXPECT_DOUBLE_EQ(fitness(100.0), 0.01);
  EXPECT_DOUBLE_EQ(fitness(2.0), 0.5);
  EXPECT_DOUBLE_EQ(fitness(0.0), 1e12);
}

TEST(Chromosome, CachedFitnessTimesLengthIsOne) {
  const Instance inst = testing::random_small_instance(6, 2);
  const DistanceMatrix dm(inst);
  const Chromosome c = make_chromosome(inst.customer_ids(), 1, dm);
  EXPECT_NEAR(c.fitness * c.length, 1.0, 1e-12);
}

TEST(GaParams, Validation) {
  GaParams p;
  EXPECT_NO_THROW(p.validate());
  p.crossover_prob = 1.5;
  EXPECT_THROW(p.validate(), InvalidParameter);
  p = {};
  p.mating_pool_size = 11;
  EXPECT_THROW(p.validate(), InvalidParameter);
  p = {};
  p.population_size = 1;
  p.mating_pool_size = 1;
  EXPECT_THROW(p.validate(), InvalidParameter);
}

TEST(InitPopulation, ShapesAndDeterminism) {
  const Instance inst = testing::random_small_instance(3, 4);
  const DistanceMatrix dm(inst);
  GaParams p;
  p.seed = 5;

  const std::vector<CityId> one{3};
  for (const Chromosome& c : init_population(one, p, dm, 1)) EXPECT_EQ(c.genes, one);

  const auto cluster = inst.customer_ids();
  const Population pop = init_population(cluster, p, dm, 1);
  ASSERT_EQ(pop.size(), 10u);
  for (const Chromosome& c : pop) {
    EXPECT_EQ(c.genes.size(), 3u);
    EXPECT_TRUE(testing::is_permutation_of(c.genes, cluster));
    EXPECT_NEAR(c.length, testing::oracle_tour_length(inst, c.genes), 1e-9);
  }
  const Population again = init_population(cluster, p, dm, 1);
  for (std::size_t i = 0; i < pop.size(); ++i) EXPECT_EQ(pop[i].genes, again[i].genes);

  EXPECT_THROW(init_population({}, p, dm, 1), InvalidParameter);
}

Chromosome with_length(double len) { return {{}, len, fitness(len)}; }

TEST(MatingPool, SortsByFitness) {
  const Population pop{with_length(5), with_length(1), with_length(3)};
  GaParams p;
  p.population_size = 3;
  p.mating_pool_size = 2;
  const Population pool = select_mating_pool(pop, p);
  ASSERT_EQ(pool.size(), 2u);
  EXPECT_EQ(pool[0].length, 1.0);
  EXPECT_EQ(pool[1].length, 3.0);

  p.mating_pool_size = 3;
  EXPECT_EQ(mating_pool_indices(pop, p), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(MatingPool, TieKeepsEarlierIndex) {
  const Population pop{with_length(4), with_length(2), with_length(3), with_length(3)};
  GaParams p;
  p.population_size = 4;
  p.mating_pool_size = 2;
  EXPECT_EQ(mating_pool_indices(pop, p), (std::vector<std::size_t>{1, 2}));
}

TEST(Pmx, TextbookExample) {
  // Segment [3,6): A contributes 4 5 6, B contributes 8 2 6; mapping 4<->8,
  // 5<->2, 6<->6. A's 2 at position 1 maps to 5, A's 8 at position 7 to 4.
  const std::vector<CityId> a{1, 2, 3, 4, 5, 6, 7, 8, 9};
  const std::vector<CityId> b{9, 3, 7, 8, 2, 6, 5, 1, 4};
  const auto [ca, cb] = pmx_crossover(a, b, 3, 6);
  EXPECT_EQ(ca, (std::vector<CityId>{1, 5, 3, 8, 2, 6, 7, 4, 9}));
  // Mirror: B keeps its genes outside, takes 4 5 6; B's 5 -> 2, B's 4 -> 8.
  EXPECT_EQ(cb, (std::vector<CityId>{9, 3, 7, 4, 5, 6, 2, 1, 8}));
}

TEST(Pmx, IdentityAndFullSegment) {
  const std::vector<CityId> a{4, 1, 3, 2};
  const auto [x, y] = pmx_crossover(a, a, 1, 3);
  EXPECT_EQ(x, a);
  EXPECT_EQ(y, a);

  const std::vector<CityId> b{2, 3, 4, 1};
  const auto [ca, cb] = pmx_crossover(a, b, 0, 4);
  EXPECT_EQ(ca, b);
  EXPECT_EQ(cb, a);
}

TEST(Pmx, RejectsBadInput) {
  const std::vector<CityId> a{1, 2, 3};
  const std::vector<CityId> b{1, 2, 4};
  EXPECT_THROW(pmx_crossover(a, b, 0, 2), InvalidParameter);
  EXPECT_THROW(pmx_crossover(a, std::vector<CityId>{1, 2}, 0, 1), InvalidParameter);
  EXPECT_THROW(pmx_crossover(a, a, 2, 2), InvalidParameter);
  EXPECT_THROW(pmx_crossover(a, a, 1, 4), InvalidParameter);
}

TEST(Pmx, ThousandRandomPairsStayPermutations) {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + gen() % 20;
    std::vector<CityId> a(n);
    std::iota(a.begin(), a.end(), 1);
    std::vector<CityId> b = a;
    std::shuffle(a.begin(), a.end(), gen);
    std::shuffle(b.begin(), b.end(), gen);
    std::size_t c1 = gen() % (n + 1), c2 = gen() % (n + 1);
    if (c1 == c2) continue;
    if (c1 > c2) std::swap(c1, c2);
    const auto [ca, cb] = pmx_crossover(a, b, c1, c2);
    ASSERT_TRUE(testing::is_permutation_of(ca, a));
    ASSERT_TRUE(testing::is_permutation_of(cb, a));
    for (std::size_t p = c1; p < c2; ++p) {
      ASSERT_EQ(ca[p], b[p]);
      ASSERT_EQ(cb[p], a[p]);
    }
  }
}

TEST(Mutation, SwapExamples) {
  EXPECT_EQ(swap_genes(std::vector<CityId>{1, 2, 3}, 0, 2), (std::vector<CityId>{3, 2, 1}));
  Rng rng(1);
  EXPECT_EQ(mutate_swap(std::vector<CityId>{7}, rng), (std::vector<CityId>{7}));
  const std::vector<CityId> g{5, 6, 7, 8, 9};
  for (int i = 0; i < 50; ++i) {
    const auto m = mutate_swap(g, rng);
    EXPECT_TRUE(testing::is_permutation_of(m, g));
    int diffs = 0;
    for (std::size_t p = 0; p < g.size(); ++p) diffs += m[p] != g[p];
    EXPECT_EQ(diffs, 2);
  }
}

TEST(Mutation, InversionPreservesGenes) {
  Rng rng(2);
  const std::vector<CityId> g{1, 2, 3, 4, 5, 6};
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(testing::is_permutation_of(mutate_inversion(g, rng), g));
}

TEST(EvolveGeneration, PoolUntouchedWhenProbabilitiesAreZero) {
  const Instance inst = testing::random_small_instance(8, 3);
  const DistanceMatrix dm(inst);
  GaParams p;
  p.crossover_prob = 0.0;
  p.mutation_prob = 0.0;
  const Population pop = init_population(inst.customer_ids(), p, dm, 1);
  Rng rng(1);
  const Population next = evolve_generation(pop, p, dm, 1, rng);
  ASSERT_EQ(next.size(), pop.size());
  for (std::size_t i : mating_pool_indices(pop, p)) EXPECT_EQ(next[i].genes, pop[i].genes);

  p.mating_pool_size = p.population_size;
  Rng rng2(1);
  const Population whole = evolve_generation(pop, p, dm, 1, rng2);
  for (std::size_t i = 0; i < pop.size(); ++i) EXPECT_EQ(whole[i].genes, pop[i].genes);
}

TEST(EvolveGeneration, RefillsSlotsOutsideThePool) {
  const Instance inst = testing::random_small_instance(9, 12);
  const DistanceMatrix dm(inst);
  GaParams p;
  p.crossover_prob = 0.0;
  p.mutation_prob = 0.0;
  const Population pop = init_population(inst.customer_ids(), p, dm, 1);
  const auto pool = mating_pool_indices(pop, p);
  Rng rng(4);
  const Population next = evolve_generation(pop, p, dm, 1, rng);
  int changed = 0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    if (std::find(pool.begin(), pool.end(), i) != pool.end()) continue;
    EXPECT_TRUE(testing::is_permutation_of(next[i].genes, pop[i].genes));
    changed += next[i].genes != pop[i].genes;
  }
  EXPECT_GT(changed, 0);
}

TEST(EvolveGeneration, RandomOperatorSequencesKeepInvariants) {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = testing::random_small_instance(2 + trial % 12, 300 + trial);
    const DistanceMatrix dm(inst);
    GaParams p;
    p.crossover_prob = (gen() % 11) / 10.0;
    p.mutation_prob = (gen() % 11) / 10.0;
    p.mutation = gen() % 2 ? MutationOp::kSwap : MutationOp::kInversion;
    p.seed = trial;
    const auto cluster = inst.customer_ids();
    Population pop = init_population(cluster, p, dm, 1);
    Rng rng(trial);
    double best = std::min_element(pop.begin(), pop.end(), [](auto& a, auto& b) { return a.length < b.length; })->length;
    for (int g = 0; g < 30; ++g) {
      pop = evolve_generation(std::move(pop), p, dm, 1, rng);
      ASSERT_EQ(pop.size(), p.population_size);
      double now = pop.front().length;
      for (const Chromosome& c : pop) {
        ASSERT_TRUE(testing::is_permutation_of(c.genes, cluster));
        ASSERT_NEAR(c.length, testing::oracle_tour_length(inst, c.genes), 1e-9);
        now = std::min(now, c.length);
      }
      ASSERT_LE(now, best);
      best = now;
    }
  }
}

TEST(RunGa, UnitSquareFindsOptimum) {
  // Depot next to a corner of the unit square.
  const Instance inst({{1, -0.5, 0}, {2, 0, 0}, {3, 1, 0}, {4, 1, 1}, {5, 0, 1}}, 1);
  const DistanceMatrix dm(inst);
  const auto cluster = inst.customer_ids();
  const double opt = testing::oracle_optimum(inst, cluster);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GaParams p;
    p.seed = seed;
    const TourResult r = run_ga(cluster, p, dm, 1);
    EXPECT_NEAR(r.length, opt, 1e-9) << "seed " << seed;
  }
}

TEST(RunGa, DegenerateClusters) {
  const Instance inst({{1, 0, 0}, {2, 3, 4}, {3, 6, 8}}, 1);
  const DistanceMatrix dm(inst);
  GaParams p;
  const std::vector<CityId> one{2};
  const TourResult r1 = run_ga(one, p, dm, 1);
  EXPECT_EQ(r1.tour, one);
  EXPECT_DOUBLE_EQ(r1.length, 10.0);
  EXPECT_EQ(r1.trace.size(), 1u);

  const std::vector<CityId> two{2, 3};
  const TourResult r2 = run_ga(two, p, dm, 1);
  EXPECT_EQ(r2.trace.size(), 1u);
  EXPECT_DOUBLE_EQ(r2.length, 20.0);

  EXPECT_THROW(run_ga({}, p, dm, 1), InvalidParameter);
}

TEST(RunGa, SevenCityClustersNearOptimum) {
  int within = 0;
  for (std::uint32_t seed = 0; seed < 50; ++seed) {
    const Instance inst = testing::random_small_instance(7, 1000 + seed);
    const DistanceMatrix dm(inst);
    const auto cluster = inst.customer_ids();
    const double opt = testing::oracle_optimum(inst, cluster);
    GaParams p;
    p.seed = seed;
    const TourResult r = run_ga(cluster, p, dm, 1);
    within += r.length <= 1.05 * opt + 1e-9;
  }
  EXPECT_GE(within, 45);
}

TEST(RunGa, TinyClustersMatchBruteForceExactly) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::uint32_t seed = 0; seed < 25; ++seed) {
      const Instance inst = testing::random_small_instance(m, 50 * m + seed);
      const DistanceMatrix dm(inst);
      const auto cluster = inst.customer_ids();
      GaParams p;
      p.seed = seed;
      EXPECT_NEAR(run_ga(cluster, p, dm, 1).length, testing::oracle_optimum(inst, cluster), 1e-9);
    }
  }
}

TEST(RunGa, TraceIsMonotoneAndDeterministic) {
  const Instance inst = generate_random_instance(40, 35, 1, 3);
  const DistanceMatrix dm(inst);
  const auto cluster = inst.customer_ids();
  GaParams p;
  p.seed = 17;
  const TourResult a = run_ga(cluster, p, dm, 1);
  const TourResult b = run_ga(cluster, p, dm, 1);
  EXPECT_EQ(a.tour, b.tour);
  EXPECT_EQ(a.trace, b.trace);
  ASSERT_FALSE(a.trace.empty());
  EXPECT_LE(a.trace.size(), p.max_generations);
  for (std::size_t g = 1; g < a.trace.size(); ++g) {
    EXPECT_LE(a.trace[g].best_length, a.trace[g - 1].best_length);
  }
  EXPECT_EQ(a.trace.back().best_length, a.length);
  EXPECT_TRUE(testing::is_permutation_of(a.tour, cluster));
}

TEST(RunGa, StallRuleStopsEarly) {
  const Instance inst = testing::random_small_instance(5, 9);
  const DistanceMatrix dm(inst);
  GaParams p;
  p.stall_generations = 5;
  const TourResult r = run_ga(inst.customer_ids(), p, dm, 1);
  EXPECT_LT(r.trace.size(), p.max_generations);
  p.stall_generations = 0;
  EXPECT_EQ(run_ga(inst.customer_ids(), p, dm, 1).trace.size(), p.max_generations);
}

}  // namespace
}  // namespace mvrp
