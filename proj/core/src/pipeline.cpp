#include "mvrp/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <future>

#include "mvrp/error.hpp"
#include "mvrp/rng.hpp"

namespace mvrp {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::kGa:
      return "ga";
    case Algorithm::kSa:
      return "sa";
    case Algorithm::kTabu:
      return "tabu";
    case Algorithm::kExact:
      return "exact";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "ga") return Algorithm::kGa;
  if (name == "sa") return Algorithm::kSa;
  if (name == "tabu") return Algorithm::kTabu;
  if (name == "exact") return Algorithm::kExact;
  throw InvalidParameter("unknown algorithm '" + std::string(name) +
                         "' (expected ga, sa, tabu or exact)");
}

std::uint64_t route_seed(std::uint64_t master, std::size_t index) noexcept {
  return derive_seed(master, "route", index);
}

std::uint64_t clustering_seed(std::uint64_t master) noexcept {
  return derive_seed(master, "kmeans");
}

TourResult solve_cluster(Algorithm algorithm, std::span<const CityId> cluster,
                         const RouterParams& params, const DistanceMatrix& dm, CityId depot_id,
                         std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kGa: {
      GaParams p = params.ga;
      p.seed = seed;
      return run_ga(cluster, p, dm, depot_id);
    }
    case Algorithm::kSa: {
      AnnealParams p = params.sa;
      p.seed = seed;
      return simulated_annealing(cluster, p, dm, depot_id);
    }
    case Algorithm::kTabu: {
      TabuParams p = params.tabu;
      p.seed = seed;
      return tabu_search(cluster, p, dm, depot_id);
    }
    case Algorithm::kExact: {
      ExactResult r = brute_force_tsp(cluster, dm, depot_id, params.exact_cap);
      TourResult out;
      out.tour = std::move(r.best_tour);
      out.length = r.best_length;
      out.trace.push_back({1, r.best_length, r.best_length});
      return out;
    }
  }
  throw InvalidParameter("unknown algorithm");
}

RoutingResult route_clusters(const Instance& inst, const DistanceMatrix& dm,
                             const ClusterAssignment& clustering, Algorithm algorithm,
                             const RouterParams& params, std::uint64_t master_seed,
                             std::size_t threads) {
  const std::size_t k = clustering.k;
  std::vector<VehicleRoute> routes(k);
  for (std::size_t c = 0; c < k; ++c) {
    routes[c].vehicle = c + 1;
    routes[c].cluster = clustering.members(c);
    routes[c].seed = route_seed(master_seed, c);
  }

  std::vector<std::exception_ptr> errors(k);
  auto work = [&](std::size_t c) noexcept {
    try {
      TourResult r = solve_cluster(algorithm, routes[c].cluster, params, dm, inst.depot_id(),
                                   routes[c].seed);
      routes[c].tour = std::move(r.tour);
      routes[c].distance = r.length;
      routes[c].trace = std::move(r.trace);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };

  if (threads <= 1 || k <= 1) {
    for (std::size_t c = 0; c < k; ++c) work(c);
  } else {
    // Static round-robin over workers; each cluster writes only its own slot.
    const std::size_t workers = std::min(threads, k);
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t c = w; c < k; c += workers) work(c);
      }));
    }
    for (auto& f : futures) f.get();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RoutingResult result;
  result.vehicles = std::move(routes);
  for (const VehicleRoute& v : result.vehicles) result.total_distance += v.distance;
  return result;
}

}  // namespace mvrp
