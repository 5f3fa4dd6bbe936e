#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvrp/baselines.hpp"
#include "mvrp/clustering.hpp"
#include "mvrp/exact.hpp"
#include "mvrp/ga.hpp"
#include "mvrp/instance.hpp"
#include "mvrp/trace.hpp"

namespace mvrp {

enum class Algorithm { kGa, kSa, kTabu, kExact };

std::string_view to_string(Algorithm a) noexcept;
/// Accepts "ga", "sa", "tabu", "exact". Throws InvalidParameter.
Algorithm parse_algorithm(std::string_view name);

struct RouterParams {
  GaParams ga;
  AnnealParams sa;
  TabuParams tabu;
  std::size_t exact_cap = kDefaultExactCap;
};

struct VehicleRoute {
  std::size_t vehicle = 0;  // 1-based
  std::vector<CityId> cluster;
  std::vector<CityId> tour;
  double distance = 0.0;
  Trace trace;
  std::uint64_t seed = 0;
};

struct RoutingResult {
  std::vector<VehicleRoute> vehicles;
  double total_distance = 0.0;
};

/// Seed for cluster `index` of a run: derive_seed(master, "route", index).
/// Independent of the algorithm so every optimizer sees the same stream id.
std::uint64_t route_seed(std::uint64_t master, std::size_t index) noexcept;
/// Seed for the clustering stage: derive_seed(master, "kmeans").
std::uint64_t clustering_seed(std::uint64_t master) noexcept;

/// Optimize one cluster's tour; the params' own seed fields are replaced
/// by `seed`.
TourResult solve_cluster(Algorithm algorithm, std::span<const CityId> cluster,
                         const RouterParams& params, const DistanceMatrix& dm, CityId depot_id,
                         std::uint64_t seed);

/// Route every cluster of `clustering`. Clusters run on up to `threads`
/// workers; results are ordered by cluster index regardless of scheduling.
/// If clusters fail, the exception of the lowest-indexed one propagates.
RoutingResult route_clusters(const Instance& inst, const DistanceMatrix& dm,
                             const ClusterAssignment& clustering, Algorithm algorithm,
                             const RouterParams& params, std::uint64_t master_seed,
                             std::size_t threads = 1);

}  // namespace mvrp
