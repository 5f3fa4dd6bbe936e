#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mvrp/instance.hpp"

namespace mvrp {

inline constexpr std::size_t kDefaultExactCap = 10;

struct ExactResult {
  std::vector<CityId> best_tour;
  double best_length = 0.0;
  std::uint64_t permutations_examined = 0;
};

/// Exhaustive search over every ordering of the cluster.
///
/// Orderings are visited in lexicographic order of city ids and only a
/// strictly shorter tour replaces the incumbent, so the result is the
/// lexicographically smallest optimal tour. Throws ClusterTooLarge when the
/// cluster exceeds `cap`, InvalidParameter when it is empty.
ExactResult brute_force_tsp(std::span<const CityId> cluster, const DistanceMatrix& dm,
                            CityId depot_id, std::size_t cap = kDefaultExactCap);

}  // namespace mvrp
