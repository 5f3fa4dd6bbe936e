#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mvrp/instance.hpp"
#include "mvrp/trace.hpp"

namespace mvrp {

/// Tour with positions [i, j] reversed. Requires i < j < tour.size().
std::vector<CityId> two_opt_neighbor(std::span<const CityId> tour, std::size_t i, std::size_t j);

/// Change in depot-anchored length when `order` (local indices of `view`)
/// has positions [i, j] reversed.
double two_opt_delta(const ClusterView& view, std::span<const std::size_t> order, std::size_t i,
                     std::size_t j) noexcept;

struct AnnealParams {
  /// Defaults to the cluster's mean edge length.
  std::optional<double> initial_temp;
  double cooling_rate = 0.995;
  /// Defaults to 100 moves per cluster city.
  std::optional<std::size_t> steps_per_temp;
  double min_temp = 1e-3;
  std::uint64_t seed = 0;
};

/// Parameters with every default resolved against the cluster. If the mean
/// edge length does not exceed min_temp the start temperature becomes
/// 10 * min_temp. Throws InvalidParameter on an inconsistent explicit setting.
AnnealParams resolve_anneal_params(const AnnealParams& params, const ClusterView& view);

struct AnnealResult : TourResult {
  /// Temperature of each level, in order.
  std::vector<double> temperatures;
  std::size_t accepted_moves = 0;
  /// Largest length increase among accepted moves (0 if none increased it).
  double max_accepted_delta = 0.0;
};

/// Random 2-opt moves with Metropolis acceptance under geometric cooling.
/// One trace row per temperature level: best-ever length and the mean
/// current length over the level. Starts from a random tour drawn from
/// derive_seed(seed, "sa").
AnnealResult simulated_annealing(std::span<const CityId> cluster, const AnnealParams& params,
                                 const DistanceMatrix& dm, CityId depot_id);

struct TabuParams {
  /// Defaults to ceil(cluster size / 2).
  std::optional<std::size_t> tenure;
  std::size_t max_iterations = 1000;
  std::uint64_t seed = 0;
};

TabuParams resolve_tabu_params(const TabuParams& params, std::size_t cluster_size);

/// Steepest descent over the full 2-opt neighborhood. Applying move (i, j)
/// makes (i, j) tabu for the next `tenure` iterations; a tabu move is still
/// taken when it beats the best-ever length. Ties go to the
/// lexicographically smallest (i, j). One trace row per iteration:
/// best-ever and current length. Starts from a random tour drawn from
/// derive_seed(seed, "tabu").
TourResult tabu_search(std::span<const CityId> cluster, const TabuParams& params,
                       const DistanceMatrix& dm, CityId depot_id);

}  // namespace mvrp
