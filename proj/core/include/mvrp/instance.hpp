#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <vector>

namespace mvrp {

using CityId = int;

struct City {
  CityId id = 0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const City&, const City&) = default;
};

/// A depot-rooted point set in the plane.
///
/// Immutable once constructed. The constructor enforces: at least two
/// cities, distinct ids, finite coordinates, and a depot id that names one
/// of the cities.
class Instance {
 public:
  Instance(std::vector<City> cities, CityId depot_id);

  const std::vector<City>& cities() const noexcept { return cities_; }
  CityId depot_id() const noexcept { return depot_id_; }
  std::size_t size() const noexcept { return cities_.size(); }

  bool contains(CityId id) const { return index_.contains(id); }
  /// Position of `id` in cities(). Throws UnknownCityId.
  std::size_t index_of(CityId id) const;
  const City& city(CityId id) const { return cities_[index_of(id)]; }
  const City& depot() const { return city(depot_id_); }

  /// Non-depot ids in list order.
  std::vector<CityId> customer_ids() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.depot_id_ == b.depot_id_ && a.cities_ == b.cities_;
  }

 private:
  std::vector<City> cities_;
  CityId depot_id_;
  std::unordered_map<CityId, std::size_t> index_;
};

double euclidean_distance(const City& a, const City& b) noexcept;

/// Pairwise Euclidean distances over an instance, indexed by list position.
///
/// Up to kCacheLimit cities the full n*n table is materialized; above that
/// entries are computed on demand from the stored coordinates.
class DistanceMatrix {
 public:
  static constexpr std::size_t kCacheLimit = 2000;

  explicit DistanceMatrix(const Instance& inst);

  std::size_t size() const noexcept { return coords_.size(); }
  bool cached() const noexcept { return !table_.empty(); }

  double at(std::size_t i, std::size_t j) const {
    if (!table_.empty()) return table_[i * coords_.size() + j];
    return euclidean_distance(coords_[i], coords_[j]);
  }
  double between(CityId a, CityId b) const {
    return at(index_of(a), index_of(b));
  }
  std::size_t index_of(CityId id) const;
  CityId id_at(std::size_t i) const { return coords_[i].id; }

 private:
  std::vector<City> coords_;
  std::unordered_map<CityId, std::size_t> index_;
  std::vector<double> table_;
};

DistanceMatrix build_distance_matrix(const Instance& inst);

/// Length of depot -> tour[0] -> ... -> tour.back() -> depot.
///
/// Edges are summed in a canonical direction (the one starting at the
/// smaller of the two end ids) so a tour and its reverse give bit-identical
/// results. Throws UnknownCityId.
double tour_length(std::span<const CityId> tour, CityId depot_id,
                   const DistanceMatrix& dm);

/// n cities uniform in [0, side]^2; the city at 1-based `depot_index` is
/// the depot. Coordinates are rounded to the 9 significant digits used by
/// the file format, so the generated instance survives a file round trip
/// exactly.
Instance generate_random_instance(std::size_t n, double side,
                                  std::size_t depot_index,
                                  std::uint64_t seed);

/// Text format:
///
///   N <n> DEPOT <id>
///   <id> <x> <y>        (n lines)
///
/// Coordinates are written with 9 significant digits. Blank lines are
/// ignored on read.
Instance parse_instance(std::istream& in);
void format_instance(const Instance& inst, std::ostream& out);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

/// Dense distance table over a depot and one cluster.
///
/// Local index 0 is the depot; 1..m are the cluster cities in the order
/// given. Used by the local-search optimizers, which need O(1) edge lookups.
class ClusterView {
 public:
  ClusterView(std::span<const CityId> cluster, CityId depot_id,
              const DistanceMatrix& dm);

  std::size_t size() const noexcept { return ids_.size() - 1; }
  double d(std::size_t a, std::size_t b) const noexcept {
    return table_[a * ids_.size() + b];
  }
  CityId id(std::size_t local) const { return ids_[local]; }

  /// Length of the closed tour 0 -> order... -> 0 in local indices.
  double tour_length(std::span<const std::size_t> order) const;
  std::vector<CityId> to_ids(std::span<const std::size_t> order) const;
  /// Mean distance over all unordered pairs of {depot} + cluster.
  double mean_edge_length() const;

 private:
  std::vector<CityId> ids_;
  std::vector<double> table_;
};

}  // namespace mvrp
