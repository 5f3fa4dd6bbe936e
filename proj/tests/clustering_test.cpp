#include "mvrp/clustering.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <set>

#include "mvrp/error.hpp"
#include "test_support.hpp"

namespace mvrp {
namespace {

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

TEST(FarthestInit, SquarePicksOppositeCorners) {
  // Whatever corner the seed picks, the diagonal is the unique point that
  // maximizes the distance to it (sqrt 2 vs 1 for the adjacent corners).
  std::set<std::size_t> first_choices;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto c = init_centroids_farthest(kSquare, 2, seed);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_DOUBLE_EQ(squared_distance(c[0], c[1]), 2.0);
    first_choices.insert(static_cast<std::size_t>(std::find(kSquare.begin(), kSquare.end(), c[0]) - kSquare.begin()));
  }
  EXPECT_GT(first_choices.size(), 1u);  // the seed really chooses
}

TEST(FarthestInit, DegenerateCounts) {
  const auto one = init_centroids_farthest(kSquare, 1, 5);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NE(std::find(kSquare.begin(), kSquare.end(), one[0]), kSquare.end());

  auto all = init_centroids_farthest(kSquare, 4, 5);
  ASSERT_EQ(all.size(), 4u);
  std::set<std::pair<double, double>> distinct;
  for (const auto& c : all) distinct.insert({c.x, c.y});
  EXPECT_EQ(distinct.size(), 4u);

  EXPECT_THROW(init_centroids_farthest(kSquare, 5, 0), InvalidParameter);
  EXPECT_THROW(init_centroids_farthest(kSquare, 0, 0), InvalidParameter);
}

TEST(RandomInit, DrawsDistinctPoints) {
  const auto c = init_centroids_random(kSquare, 4, 1);
  std::set<std::pair<double, double>> distinct;
  for (const auto& p : c) distinct.insert({p.x, p.y});
  EXPECT_EQ(distinct.size(), 4u);
  EXPECT_THROW(init_centroids_random(kSquare, 5, 0), InvalidParameter);
}

TEST(AssignPoints, Examples) {
  const std::vector<Point> pts{{0, 0}, {0, 1}, {10, 10}, {10, 11}};
  const std::vector<Centroid> cents{{0, 0.5}, {10, 10.5}};
  EXPECT_EQ(assign_points(pts, cents), (std::vector<std::size_t>{0, 0, 1, 1}));

  const std::vector<Point> tie{{1, 0}};
  const std::vector<Centroid> both{{0, 0}, {2, 0}};
  EXPECT_EQ(assign_points(tie, both), (std::vector<std::size_t>{0}));

  const std::vector<Centroid> single{{5, 5}};
  EXPECT_EQ(assign_points(pts, single), (std::vector<std::size_t>(4, 0)));
}

TEST(RecomputeCentroids, Examples) {
  const std::vector<Point> pair{{0, 0}, {2, 0}};
  EXPECT_EQ(recompute_centroids(pair, std::vector<std::size_t>{0, 0}, 1)[0], (Centroid{1, 0}));

  const std::vector<Point> single{{3, 4}};
  EXPECT_EQ(recompute_centroids(single, std::vector<std::size_t>{0}, 1)[0], (Centroid{3, 4}));

  // (0+0+3)/3, (0+3+0)/3
  const std::vector<Point> tri{{0, 0}, {0, 3}, {3, 0}};
  EXPECT_EQ(recompute_centroids(tri, std::vector<std::size_t>{0, 0, 0}, 1)[0], (Centroid{1, 1}));
}

Instance two_groups() {
  return Instance({{1, 50, 50},
                   {2, 0, 0}, {3, 1, 0}, {4, 0, 1},
                   {5, 20, 20}, {6, 21, 20}, {7, 20, 22}},
                  1);
}

// Minimum wcss over every split of the points into two non-empty groups.
double brute_force_two_partition(const std::vector<Point>& pts) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = pts.size();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = (mask >> i) & 1u;
    double sx[2] = {0, 0}, sy[2] = {0, 0}, cnt[2] = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      sx[labels[i]] += pts[i].x;
      sy[labels[i]] += pts[i].y;
      cnt[labels[i]] += 1;
    }
    double w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dx = pts[i].x - sx[labels[i]] / cnt[labels[i]];
      const double dy = pts[i].y - sy[labels[i]] / cnt[labels[i]];
      w += dx * dx + dy * dy;
    }
    best = std::min(best, w);
  }
  return best;
}

TEST(KMeans, FindsNaturalGroups) {
  const Instance inst = two_groups();
  std::vector<Point> pts;
  for (CityId id : inst.customer_ids()) pts.push_back({inst.city(id).x, inst.city(id).y});
  const double optimum = brute_force_two_partition(pts);

  for (std::size_t restarts : {1u, 3u, 10u}) {
    for (auto init : {CentroidInit::kFarthest, CentroidInit::kRandom}) {
      KMeansParams p;
      p.k = 2;
      p.restarts = restarts;
      p.init = init;
      p.seed = 9;
      const ClusterAssignment a = kmeans(inst, p);
      EXPECT_NEAR(a.wcss, optimum, 1e-9);
      EXPECT_EQ(a.label_of(2), a.label_of(3));
      EXPECT_EQ(a.label_of(2), a.label_of(4));
      EXPECT_EQ(a.label_of(5), a.label_of(6));
      EXPECT_EQ(a.label_of(5), a.label_of(7));
      EXPECT_NE(a.label_of(2), a.label_of(5));
      EXPECT_THROW(a.label_of(1), UnknownCityId);
    }
  }
}

TEST(KMeans, SingleClusterIsMeanOfCustomers) {
  const Instance inst = two_groups();
  KMeansParams p;
  p.k = 1;
  const ClusterAssignment a = kmeans(inst, p);
  EXPECT_EQ(a.members(0).size(), 6u);
  EXPECT_NEAR(a.centroids[0].x, (0 + 1 + 0 + 20 + 21 + 20) / 6.0, 1e-12);
  EXPECT_NEAR(a.centroids[0].y, (0 + 0 + 1 + 20 + 20 + 22) / 6.0, 1e-12);
}

TEST(KMeans, PaperSizedInstanceProperties) {
  const Instance inst = generate_random_instance(180, 35, 100, 42);
  KMeansParams p;
  p.k = 6;
  p.seed = 42;
  const ClusterAssignment a = kmeans(inst, p);
  ASSERT_EQ(a.k, 6u);
  std::size_t total = 0;
  std::set<CityId> seen;
  for (std::size_t j = 0; j < 6; ++j) {
    const auto m = a.members(j);
    EXPECT_FALSE(m.empty());
    total += m.size();
    seen.insert(m.begin(), m.end());
  }
  EXPECT_EQ(total, 179u);
  EXPECT_EQ(seen.size(), 179u);
  EXPECT_FALSE(seen.contains(100));

  // wcss recomputable from labels and centroids.
  double w = 0;
  for (std::size_t i = 0; i < a.city_ids.size(); ++i) {
    const City& c = inst.city(a.city_ids[i]);
    w += squared_distance({c.x, c.y}, a.centroids[a.labels[i]]);
  }
  EXPECT_NEAR(w, a.wcss, 1e-9);

  for (std::size_t i = 1; i < a.wcss_history.size(); ++i) {
    EXPECT_LE(a.wcss_history[i], a.wcss_history[i - 1] + 1e-9);
  }
  EXPECT_LE(a.iterations, p.max_iter);
  ASSERT_EQ(a.restart_wcss.size(), p.restarts);
  for (double r : a.restart_wcss) EXPECT_LE(a.wcss, r);
  EXPECT_EQ(a.wcss, a.restart_wcss[a.restart]);
}

TEST(KMeans, RespectsMaxIter) {
  const Instance inst = generate_random_instance(180, 35, 100, 1);
  KMeansParams p;
  p.k = 6;
  p.max_iter = 2;
  p.restarts = 3;
  const ClusterAssignment a = kmeans(inst, p);
  EXPECT_LE(a.iterations, 2u);
}

TEST(KMeans, RepairsEmptyClustersOnCoincidentPoints) {
  std::vector<City> cities{{1, 0, 0}};
  for (int i = 0; i < 5; ++i) cities.push_back({i + 2, 3, 3});
  const Instance inst(std::move(cities), 1);
  KMeansParams p;
  p.k = 3;
  const ClusterAssignment a = kmeans(inst, p);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_FALSE(a.members(j).empty());
  EXPECT_NEAR(a.wcss, 0.0, 1e-12);
}

TEST(KMeans, RejectsBadParameters) {
  const Instance inst = two_groups();
  KMeansParams p;
  p.k = 7;
  EXPECT_THROW(kmeans(inst, p), InvalidParameter);
  p.k = 0;
  EXPECT_THROW(kmeans(inst, p), InvalidParameter);
  p.k = 2;
  p.restarts = 0;
  EXPECT_THROW(kmeans(inst, p), InvalidParameter);
}

TEST(KMeans, Deterministic) {
  const Instance inst = generate_random_instance(120, 35, 1, 8);
  KMeansParams p;
  p.k = 5;
  p.seed = 77;
  const auto a = kmeans(inst, p);
  const auto b = kmeans(inst, p);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.wcss, b.wcss);
}

}  // namespace
}  // namespace mvrp
