#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mvrp/instance.hpp"

namespace mvrp {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

using Centroid = Point;

enum class CentroidInit {
  kFarthest,  // seed-chosen first point, then farthest-point traversal
  kRandom,    // k distinct points drawn uniformly
};

struct KMeansParams {
  std::size_t k = 6;
  std::uint64_t seed = 0;
  std::size_t max_iter = 100;
  std::size_t restarts = 10;
  CentroidInit init = CentroidInit::kFarthest;
};

/// Partition of the non-depot cities into k vehicle groups.
///
/// city_ids and labels are parallel arrays in instance order with the depot
/// omitted. Every label in [0, k) is used at least once.
struct ClusterAssignment {
  std::size_t k = 0;
  std::vector<CityId> city_ids;
  std::vector<std::size_t> labels;
  std::vector<Centroid> centroids;
  double wcss = 0.0;
  std::size_t iterations = 0;
  /// Which restart produced this assignment.
  std::size_t restart = 0;
  /// wcss after each Lloyd iteration of the winning restart.
  std::vector<double> wcss_history;
  /// Final wcss of every restart, by restart index.
  std::vector<double> restart_wcss;

  /// City ids of cluster j, in instance order.
  std::vector<CityId> members(std::size_t j) const;
  std::size_t label_of(CityId id) const;
};

double squared_distance(const Point& a, const Point& b) noexcept;

std::vector<Centroid> init_centroids_farthest(std::span<const Point> points, std::size_t k,
                                              std::uint64_t seed);
std::vector<Centroid> init_centroids_random(std::span<const Point> points, std::size_t k,
                                            std::uint64_t seed);

/// Nearest centroid per point; ties go to the lowest centroid index.
std::vector<std::size_t> assign_points(std::span<const Point> points,
                                       std::span<const Centroid> centroids);

/// Mean of each cluster. An empty cluster keeps its previous centroid when
/// `previous` is supplied and otherwise sits at the origin.
std::vector<Centroid> recompute_centroids(std::span<const Point> points,
                                          std::span<const std::size_t> labels, std::size_t k,
                                          std::span<const Centroid> previous = {});

double compute_wcss(std::span<const Point> points, std::span<const std::size_t> labels,
                    std::span<const Centroid> centroids);

/// Fill every empty cluster. Each empty cluster takes the point, among
/// clusters holding two or more points, that lies farthest from its own
/// centroid (lowest index on ties); the centroid moves onto that point.
/// Returns the number of clusters repaired.
std::size_t repair_empty_clusters(std::span<const Point> points, std::span<std::size_t> labels,
                                  std::span<Centroid> centroids);

/// One Lloyd run from the given start. Iterates assign -> recompute until
/// the labels repeat or max_iter iterations have run.
ClusterAssignment lloyd(std::span<const Point> points, std::vector<Centroid> start,
                        std::size_t max_iter);

/// k-means over the non-depot cities of `inst`, best of params.restarts
/// runs by (wcss, restart index). Restart r is seeded with
/// derive_seed(params.seed, "kmeans-restart", r).
ClusterAssignment kmeans(const Instance& inst, const KMeansParams& params);

}  // namespace mvrp
