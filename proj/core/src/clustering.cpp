#include "mvrp/clustering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mvrp/error.hpp"
#include "mvrp/rng.hpp"

namespace mvrp {

std::vector<CityId> ClusterAssignment::members(std::size_t j) const {
  std::vector<CityId> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == j) out.push_back(city_ids[i]);
  }
  return out;
}

std::size_t ClusterAssignment::label_of(CityId id) const {
  auto it = std::find(city_ids.begin(), city_ids.end(), id);
  if (it == city_ids.end()) throw UnknownCityId(id);
  return labels[static_cast<std::size_t>(it - city_ids.begin())];
}

double squared_distance(const Point& a, const Point& b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

std::vector<Centroid> init_centroids_farthest(std::span<const Point> points, std::size_t k,
                                              std::uint64_t seed) {
  if (k < 1) throw InvalidParameter("k must be at least 1");
  if (k > points.size()) {
    throw InvalidParameter("k = " + std::to_string(k) + " exceeds point count " +
                           std::to_string(points.size()));
  }
  Rng rng(seed);
  const std::size_t n = points.size();
  std::vector<bool> chosen(n, false);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<Centroid> centroids;
  centroids.reserve(k);

  std::size_t pick = static_cast<std::size_t>(rng.uniform_index(n));
  for (;;) {
    chosen[pick] = true;
    centroids.push_back(points[pick]);
    if (centroids.size() == k) break;
    const Point last = points[pick];
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      nearest[i] = std::min(nearest[i], squared_distance(points[i], last));
      if (nearest[i] > best) {
        best = nearest[i];
        pick = i;
      }
    }
  }
  return centroids;
}

std::vector<Centroid> init_centroids_random(std::span<const Point> points, std::size_t k,
                                            std::uint64_t seed) {
  if (k < 1) throw InvalidParameter("k must be at least 1");
  if (k > points.size()) {
    throw InvalidParameter("k = " + std::to_string(k) + " exceeds point count " +
                           std::to_string(points.size()));
  }
  Rng rng(seed);
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  // Partial Fisher-Yates: the first k slots are a uniform k-subset.
  std::vector<Centroid> centroids;
  centroids.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_index(order.size() - i));
    std::swap(order[i], order[j]);
    centroids.push_back(points[order[i]]);
  }
  return centroids;
}

std::vector<std::size_t> assign_points(std::span<const Point> points,
                                       std::span<const Centroid> centroids) {
  if (centroids.empty()) throw InvalidParameter("need at least one centroid");
  std::vector<std::size_t> labels(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = squared_distance(points[i], centroids[0]);
    for (std::size_t j = 1; j < centroids.size(); ++j) {
      const double d = squared_distance(points[i], centroids[j]);
      if (d < best) {
        best = d;
        labels[i] = j;
      }
    }
  }
  return labels;
}

std::vector<Centroid> recompute_centroids(std::span<const Point> points,
                                          std::span<const std::size_t> labels, std::size_t k,
                                          std::span<const Centroid> previous) {
  std::vector<Centroid> sums(k);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    sums[labels[i]].x += points[i].x;
    sums[labels[i]].y += points[i].y;
    ++counts[labels[i]];
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] == 0) {
      sums[j] = j < previous.size() ? previous[j] : Centroid{};
      continue;
    }
    sums[j].x /= static_cast<double>(counts[j]);
    sums[j].y /= static_cast<double>(counts[j]);
  }
  return sums;
}

double compute_wcss(std::span<const Point> points, std::span<const std::size_t> labels,
                    std::span<const Centroid> centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    total += squared_distance(points[i], centroids[labels[i]]);
  }
  return total;
}

std::size_t repair_empty_clusters(std::span<const Point> points, std::span<std::size_t> labels,
                                  std::span<Centroid> centroids) {
  const std::size_t k = centroids.size();
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t l : labels) ++counts[l];
  std::size_t repaired = 0;
  for (std::size_t empty = 0; empty < k; ++empty) {
    if (counts[empty] != 0) continue;
    double worst = -1.0;
    std::size_t donor = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (counts[labels[i]] < 2) continue;
      const double d = squared_distance(points[i], centroids[labels[i]]);
      if (d > worst) {
        worst = d;
        donor = i;
      }
    }
    if (donor == points.size()) break;  // fewer points than clusters
    --counts[labels[donor]];
    labels[donor] = empty;
    counts[empty] = 1;
    centroids[empty] = points[donor];
    ++repaired;
  }
  return repaired;
}

ClusterAssignment lloyd(std::span<const Point> points, std::vector<Centroid> start,
                        std::size_t max_iter) {
  const std::size_t k = start.size();
  ClusterAssignment out;
  out.k = k;
  std::vector<Centroid> centroids = std::move(start);
  std::vector<std::size_t> labels = assign_points(points, centroids);
  repair_empty_clusters(points, labels, centroids);

  while (out.iterations < max_iter) {
    centroids = recompute_centroids(points, labels, k, centroids);
    ++out.iterations;
    out.wcss_history.push_back(compute_wcss(points, labels, centroids));
    std::vector<std::size_t> next = assign_points(points, centroids);
    repair_empty_clusters(points, next, centroids);
    if (next == labels) break;
    labels = std::move(next);
  }
  out.centroids = recompute_centroids(points, labels, k, centroids);
  out.wcss = compute_wcss(points, labels, out.centroids);
  out.labels = std::move(labels);
  return out;
}

ClusterAssignment kmeans(const Instance& inst, const KMeansParams& params) {
  const std::vector<CityId> ids = inst.customer_ids();
  if (params.k < 1) throw InvalidParameter("k must be at least 1");
  if (params.k > ids.size()) {
    throw InvalidParameter("k = " + std::to_string(params.k) + " exceeds the " +
                           std::to_string(ids.size()) + " non-depot cities");
  }
  if (params.restarts < 1) throw InvalidParameter("restarts must be at least 1");

  std::vector<Point> points;
  points.reserve(ids.size());
  for (CityId id : ids) {
    const City& c = inst.city(id);
    points.push_back({c.x, c.y});
  }

  ClusterAssignment best;
  std::vector<double> restart_wcss;
  for (std::size_t r = 0; r < params.restarts; ++r) {
    const std::uint64_t seed = derive_seed(params.seed, "kmeans-restart", r);
    std::vector<Centroid> start = params.init == CentroidInit::kFarthest
                                      ? init_centroids_farthest(points, params.k, seed)
                                      : init_centroids_random(points, params.k, seed);
    ClusterAssignment run = lloyd(points, std::move(start), params.max_iter);
    restart_wcss.push_back(run.wcss);
    if (r == 0 || run.wcss < best.wcss) {
      best = std::move(run);
      best.restart = r;
    }
  }
  best.city_ids = ids;
  best.restart_wcss = std::move(restart_wcss);
  return best;
}

}  // namespace mvrp
