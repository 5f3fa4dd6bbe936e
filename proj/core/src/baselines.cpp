#include "mvrp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mvrp/error.hpp"
#include "mvrp/rng.hpp"

namespace mvrp {

std::vector<CityId> two_opt_neighbor(std::span<const CityId> tour, std::size_t i, std::size_t j) {
  if (!(i < j && j < tour.size())) {
    throw InvalidParameter("2-opt indices must satisfy i < j < length");
  }
  std::vector<CityId> out(tour.begin(), tour.end());
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(i),
               out.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return out;
}

double two_opt_delta(const ClusterView& view, std::span<const std::size_t> order, std::size_t i,
                     std::size_t j) noexcept {
  const std::size_t before = i == 0 ? 0 : order[i - 1];
  const std::size_t after = j + 1 == order.size() ? 0 : order[j + 1];
  return view.d(before, order[j]) + view.d(order[i], after) - view.d(before, order[i]) -
         view.d(order[j], after);
}

namespace {

std::vector<std::size_t> random_order(std::size_t m, Rng& rng) {
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(std::span<std::size_t>(order));
  return order;
}

void reverse_segment(std::vector<std::size_t>& order, std::size_t i, std::size_t j) {
  std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i),
               order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
}

TourResult single_city(std::span<const CityId> cluster, const DistanceMatrix& dm,
                       CityId depot_id) {
  TourResult r;
  r.tour.assign(cluster.begin(), cluster.end());
  r.length = tour_length(r.tour, depot_id, dm);
  r.trace.push_back({1, r.length, r.length});
  return r;
}

}  // namespace

AnnealParams resolve_anneal_params(const AnnealParams& params, const ClusterView& view) {
  AnnealParams p = params;
  if (!(p.cooling_rate > 0.0 && p.cooling_rate < 1.0)) {
    throw InvalidParameter("cooling_rate must lie in (0, 1)");
  }
  if (!(p.min_temp > 0.0)) throw InvalidParameter("min_temp must be positive");
  if (!p.initial_temp) {
    const double mean = view.mean_edge_length();
    p.initial_temp = mean > p.min_temp ? mean : 10.0 * p.min_temp;
  }
  if (!(*p.initial_temp > p.min_temp)) {
    throw InvalidParameter("initial_temp must exceed min_temp");
  }
  if (!p.steps_per_temp) p.steps_per_temp = 100 * std::max<std::size_t>(view.size(), 1);
  if (*p.steps_per_temp < 1) throw InvalidParameter("steps_per_temp must be at least 1");
  return p;
}

AnnealResult simulated_annealing(std::span<const CityId> cluster, const AnnealParams& params,
                                 const DistanceMatrix& dm, CityId depot_id) {
  if (cluster.empty()) throw InvalidParameter("cannot anneal an empty cluster");
  const ClusterView view(cluster, depot_id, dm);
  const AnnealParams p = resolve_anneal_params(params, view);
  AnnealResult result;
  if (view.size() == 1) {
    static_cast<TourResult&>(result) = single_city(cluster, dm, depot_id);
    result.temperatures.push_back(*p.initial_temp);
    return result;
  }

  Rng rng(derive_seed(p.seed, "sa"));
  const std::size_t m = view.size();
  std::vector<std::size_t> order = random_order(m, rng);
  double current = view.tour_length(order);
  std::vector<std::size_t> best_order = order;
  double best = current;

  std::size_t level = 0;
  for (double temp = *p.initial_temp; temp > p.min_temp; temp *= p.cooling_rate) {
    result.temperatures.push_back(temp);
    double sum = 0.0;
    for (std::size_t s = 0; s < *p.steps_per_temp; ++s) {
      auto [i, j] = rng.distinct_pair(m);
      const double delta = two_opt_delta(view, order, i, j);
      if (delta < 0.0 || rng.uniform01() < std::exp(-delta / temp)) {
        reverse_segment(order, i, j);
        current += delta;
        ++result.accepted_moves;
        result.max_accepted_delta = std::max(result.max_accepted_delta, delta);
        if (current < best) {
          best = current;
          best_order = order;
        }
      }
      sum += current;
    }
    // Resynchronize the running length to stop rounding drift.
    current = view.tour_length(order);
    result.trace.push_back({++level, best, sum / static_cast<double>(*p.steps_per_temp)});
  }

  result.tour = view.to_ids(best_order);
  result.length = tour_length(result.tour, depot_id, dm);
  return result;
}

TabuParams resolve_tabu_params(const TabuParams& params, std::size_t cluster_size) {
  TabuParams p = params;
  if (!p.tenure) p.tenure = std::max<std::size_t>((cluster_size + 1) / 2, 1);
  if (*p.tenure < 1) throw InvalidParameter("tabu tenure must be at least 1");
  return p;
}

TourResult tabu_search(std::span<const CityId> cluster, const TabuParams& params,
                       const DistanceMatrix& dm, CityId depot_id) {
  if (cluster.empty()) throw InvalidParameter("cannot run tabu search on an empty cluster");
  const ClusterView view(cluster, depot_id, dm);
  const TabuParams p = resolve_tabu_params(params, view.size());
  if (view.size() == 1) return single_city(cluster, dm, depot_id);

  Rng rng(derive_seed(p.seed, "tabu"));
  const std::size_t m = view.size();
  std::vector<std::size_t> order = random_order(m, rng);
  double current = view.tour_length(order);
  std::vector<std::size_t> best_order = order;
  double best = current;
  // tabu_until[i * m + j]: first iteration at which move (i, j) is free again.
  std::vector<std::size_t> tabu_until(m * m, 0);

  TourResult result;
  for (std::size_t iter = 0; iter < p.max_iterations; ++iter) {
    double best_delta = std::numeric_limits<double>::infinity();
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double delta = two_opt_delta(view, order, i, j);
        const bool tabu = iter < tabu_until[i * m + j];
        if (tabu && !(current + delta < best)) continue;
        if (delta < best_delta) {
          best_delta = delta;
          bi = i;
          bj = j;
        }
      }
    }
    if (std::isfinite(best_delta)) {
      reverse_segment(order, bi, bj);
      current = view.tour_length(order);
      tabu_until[bi * m + bj] = iter + 1 + *p.tenure;
      if (current < best) {
        best = current;
        best_order = order;
      }
    }
    result.trace.push_back({iter + 1, best, current});
  }

  result.tour = view.to_ids(best_order);
  result.length = tour_length(result.tour, depot_id, dm);
  return result;
}

}  // namespace mvrp
