#include "mvrp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "mvrp/error.hpp"
#include "mvrp/rng.hpp"

namespace mvrp {

namespace {

std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double round_to_format(double v) { return std::strtod(format_coord(v).c_str(), nullptr); }

std::unordered_map<CityId, std::size_t> build_index(const std::vector<City>& cities) {
  std::unordered_map<CityId, std::size_t> index;
  index.reserve(cities.size());
  for (std::size_t i = 0; i < cities.size(); ++i) index.emplace(cities[i].id, i);
  return index;
}

}  // namespace

Instance::Instance(std::vector<City> cities, CityId depot_id)
    : cities_(std::move(cities)), depot_id_(depot_id) {
  if (cities_.size() < 2) {
    throw InvalidParameter("instance needs at least 2 cities (depot + 1)");
  }
  index_.reserve(cities_.size());
  for (std::size_t i = 0; i < cities_.size(); ++i) {
    const City& c = cities_[i];
    if (!std::isfinite(c.x) || !std::isfinite(c.y)) {
      throw InvalidParameter("city " + std::to_string(c.id) + " has non-finite coordinates");
    }
    if (!index_.emplace(c.id, i).second) {
      throw InvalidParameter("duplicate city id " + std::to_string(c.id));
    }
  }
  if (!index_.contains(depot_id_)) {
    throw InvalidParameter("depot id " + std::to_string(depot_id_) + " is not a city");
  }
}

std::size_t Instance::index_of(CityId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownCityId(id);
  return it->second;
}

std::vector<CityId> Instance::customer_ids() const {
  std::vector<CityId> ids;
  ids.reserve(cities_.size() - 1);
  for (const City& c : cities_) {
    if (c.id != depot_id_) ids.push_back(c.id);
  }
  return ids;
}

double euclidean_distance(const City& a, const City& b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

DistanceMatrix::DistanceMatrix(const Instance& inst)
    : coords_(inst.cities()), index_(build_index(coords_)) {
  const std::size_t n = coords_.size();
  if (n > kCacheLimit) return;
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table_[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = euclidean_distance(coords_[i], coords_[j]);
      table_[i * n + j] = d;
      table_[j * n + i] = d;
    }
  }
}

std::size_t DistanceMatrix::index_of(CityId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownCityId(id);
  return it->second;
}

DistanceMatrix build_distance_matrix(const Instance& inst) { return DistanceMatrix(inst); }

double tour_length(std::span<const CityId> tour, CityId depot_id, const DistanceMatrix& dm) {
  if (tour.empty()) return 0.0;
  const std::size_t depot = dm.index_of(depot_id);
  std::vector<std::size_t> idx(tour.size());
  for (std::size_t i = 0; i < tour.size(); ++i) idx[i] = dm.index_of(tour[i]);
  if (tour.front() > tour.back()) std::reverse(idx.begin(), idx.end());

  double total = dm.at(depot, idx.front());
  for (std::size_t i = 1; i < idx.size(); ++i) total += dm.at(idx[i - 1], idx[i]);
  return total + dm.at(idx.back(), depot);
}

Instance generate_random_instance(std::size_t n, double side, std::size_t depot_index,
                                  std::uint64_t seed) {
  if (n < 2) throw InvalidParameter("city count must be at least 2");
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw InvalidParameter("square side must be positive and finite");
  }
  if (depot_index < 1 || depot_index > n) {
    throw InvalidParameter("depot index must lie in [1, n]");
  }
  Rng rng(derive_seed(seed, "instance"));
  std::vector<City> cities;
  cities.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = round_to_format(rng.uniform(0.0, side));
    const double y = round_to_format(rng.uniform(0.0, side));
    cities.push_back({static_cast<CityId>(i + 1), x, y});
  }
  return Instance(std::move(cities), static_cast<CityId>(depot_index));
}

Instance parse_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_content_line()) throw ParseError(line_no + 1, "missing header 'N <n> DEPOT <id>'");
  std::istringstream header(line);
  std::string n_tag, depot_tag;
  long long n = 0;
  long long depot = 0;
  if (!(header >> n_tag >> n) || n_tag != "N") {
    throw ParseError(line_no, "expected header 'N <n> DEPOT <id>'");
  }
  if (!(header >> depot_tag >> depot) || depot_tag != "DEPOT") {
    throw ParseError(line_no, "missing depot declaration");
  }
  std::string extra;
  if (header >> extra) throw ParseError(line_no, "trailing data in header");
  if (n < 2) throw ParseError(line_no, "city count must be at least 2");

  std::vector<City> cities;
  cities.reserve(static_cast<std::size_t>(n));
  std::unordered_set<CityId> seen;
  for (long long k = 0; k < n; ++k) {
    if (!next_content_line()) {
      throw ParseError(line_no + 1, "expected " + std::to_string(n) + " city lines, got " +
                                        std::to_string(k));
    }
    std::istringstream row(line);
    long long id = 0;
    std::string xs, ys;
    if (!(row >> id >> xs >> ys)) throw ParseError(line_no, "expected '<id> <x> <y>'");
    if (row >> extra) throw ParseError(line_no, "trailing data after coordinates");
    char* end = nullptr;
    const double x = std::strtod(xs.c_str(), &end);
    if (*end != '\0') throw ParseError(line_no, "bad x coordinate '" + xs + "'");
    const double y = std::strtod(ys.c_str(), &end);
    if (*end != '\0') throw ParseError(line_no, "bad y coordinate '" + ys + "'");
    if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError(line_no, "non-finite coordinate");
    if (!seen.insert(static_cast<CityId>(id)).second) {
      throw ParseError(line_no, "duplicate city id " + std::to_string(id));
    }
    cities.push_back({static_cast<CityId>(id), x, y});
  }
  if (next_content_line()) throw ParseError(line_no, "more city lines than declared");
  if (!seen.contains(static_cast<CityId>(depot))) {
    throw ParseError(1, "depot id " + std::to_string(depot) + " is not among the cities");
  }
  return Instance(std::move(cities), static_cast<CityId>(depot));
}

void format_instance(const Instance& inst, std::ostream& out) {
  out << "N " << inst.size() << " DEPOT " << inst.depot_id() << '\n';
  for (const City& c : inst.cities()) {
    out << c.id << ' ' << format_coord(c.x) << ' ' << format_coord(c.y) << '\n';
  }
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file " + path.string());
  return parse_instance(in);
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write instance file " + path.string());
  format_instance(inst, out);
  if (!out) throw IoError("write failed for " + path.string());
}

ClusterView::ClusterView(std::span<const CityId> cluster, CityId depot_id,
                         const DistanceMatrix& dm) {
  ids_.reserve(cluster.size() + 1);
  ids_.push_back(depot_id);
  std::unordered_set<CityId> seen{depot_id};
  for (CityId id : cluster) {
    if (!seen.insert(id).second) {
      throw InvalidParameter("cluster repeats city " + std::to_string(id) +
                             " or contains the depot");
    }
    ids_.push_back(id);
  }
  std::vector<std::size_t> idx(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) idx[i] = dm.index_of(ids_[i]);
  const std::size_t m = ids_.size();
  table_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table_[a * m + b] = dm.at(idx[a], idx[b]);
  }
}

double ClusterView::tour_length(std::span<const std::size_t> order) const {
  if (order.empty()) return 0.0;
  double total = d(0, order.front());
  for (std::size_t i = 1; i < order.size(); ++i) total += d(order[i - 1], order[i]);
  return total + d(order.back(), 0);
}

std::vector<CityId> ClusterView::to_ids(std::span<const std::size_t> order) const {
  std::vector<CityId> out;
  out.reserve(order.size());
  for (std::size_t local : order) out.push_back(ids_[local]);
  return out;
}

double ClusterView::mean_edge_length() const {
  const std::size_t m = ids_.size();
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      sum += d(a, b);
      ++pairs;
    }
  }
  return pairs == 0 ? 0.0 : sum / static_cast<double>(pairs);
}

}  // namespace mvrp
