#include "mvrp/exact.hpp"

#include <algorithm>

#include "mvrp/error.hpp"

namespace mvrp {

ExactResult brute_force_tsp(std::span<const CityId> cluster, const DistanceMatrix& dm,
                            CityId depot_id, std::size_t cap) {
  if (cluster.empty()) throw InvalidParameter("cannot enumerate an empty cluster");
  if (cluster.size() > cap) throw ClusterTooLarge(cluster.size(), cap);

  std::vector<CityId> perm(cluster.begin(), cluster.end());
  std::sort(perm.begin(), perm.end());
  if (std::adjacent_find(perm.begin(), perm.end()) != perm.end()) {
    throw InvalidParameter("cluster repeats a city");
  }

  ExactResult result;
  result.best_tour = perm;
  result.best_length = tour_length(perm, depot_id, dm);
  do {
    ++result.permutations_examined;
    const double len = tour_length(perm, depot_id, dm);
    if (len < result.best_length) {
      result.best_length = len;
      result.best_tour = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace mvrp
