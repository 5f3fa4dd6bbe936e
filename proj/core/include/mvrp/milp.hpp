#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvrp/instance.hpp"

namespace mvrp {

// Time-indexed single-vehicle tour model over cities labelled 1..n (the
// position of each city in the instance list):
//
//   minimize   sum_{i != j} sum_t d_ij x_ijt
//   c2_t:      sum_{i != j} x_ijt                       = 1   for each step t
//   c3_i:      sum_{j != i} sum_t x_ijt                 = 1   for each city i
//   c4_j:      sum_{i != j} sum_t x_ijt                 = 1   for each city j
//   c5_j_t:    sum_{i != j} x_ijt - sum_{k != j} x_jk(t+1) = 0 for each j, t
//   x_ijt in {0, 1}
//
// Step t + 1 wraps to 1 after t = n, which closes the tour.

/// Variable x_ijt, all indices 1-based.
struct ArcStep {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t t = 0;

  friend auto operator<=>(const ArcStep&, const ArcStep&) = default;
};

enum class RowKind {
  kOneArcPerStep,  // c2_t
  kLeaveOnce,      // c3_i
  kEnterOnce,      // c4_j
  kContinuity,     // c5_j_t
  kDomain,         // variable outside the model (i == j or index out of range)
};

struct RowId {
  RowKind kind = RowKind::kOneArcPerStep;
  std::size_t a = 0;  // t, i, j or j
  std::size_t b = 0;  // t for kContinuity

  std::string name() const;
  friend bool operator==(const RowId&, const RowId&) = default;
};

struct RowTerm {
  ArcStep var;
  double coef = 0.0;
};

class IlpModel {
 public:
  /// costs is row-major n*n with a zero diagonal.
  IlpModel(std::size_t n, std::vector<double> costs);

  std::size_t n() const noexcept { return n_; }
  std::size_t variable_count() const noexcept { return n_ * (n_ - 1) * n_; }
  std::size_t row_count() const noexcept { return 3 * n_ + n_ * n_; }
  double cost(std::size_t i, std::size_t j) const { return costs_[(i - 1) * n_ + (j - 1)]; }

  bool contains(const ArcStep& v) const noexcept {
    return v.i >= 1 && v.i <= n_ && v.j >= 1 && v.j <= n_ && v.t >= 1 && v.t <= n_ &&
           v.i != v.j;
  }
  std::size_t next_step(std::size_t t) const noexcept { return t == n_ ? 1 : t + 1; }

  /// Variables in (t, i, j) order, the order of the objective in LP output.
  std::vector<ArcStep> variables() const;
  /// Rows in evaluation order: c2 by t, c3 by i, c4 by j, c5 by (j, t).
  std::vector<RowId> rows() const;
  std::vector<RowTerm> row_terms(const RowId& row) const;
  double row_rhs(const RowId& row) const { return row.kind == RowKind::kContinuity ? 0.0 : 1.0; }

 private:
  std::size_t n_;
  std::vector<double> costs_;
};

/// Throws InvalidParameter for fewer than 2 cities.
IlpModel build_model(const Instance& inst, const DistanceMatrix& dm);

std::string variable_name(const ArcStep& v);

/// 0/1 assignment stored as the sorted set of variables equal to 1.
struct IndicatorSolution {
  std::vector<ArcStep> ones;

  explicit IndicatorSolution(std::vector<ArcStep> set_to_one = {});
  bool value(const ArcStep& v) const;
};

/// Encode the closed tour depot -> tour... -> depot; step t uses the t-th
/// arc. The tour must list every non-depot city once, else IncompleteTour.
IndicatorSolution tour_to_indicators(std::span<const CityId> tour, CityId depot_id,
                                     const Instance& inst);

struct FeasibilityVerdict {
  bool feasible = false;
  /// First violated row in rows() order, or the offending variable's
  /// domain row.
  std::optional<RowId> violated;
  double lhs = 0.0;
  double rhs = 0.0;
  double objective = 0.0;
};

FeasibilityVerdict check_feasibility(const IndicatorSolution& sol, const IlpModel& model);

/// CPLEX LP text: Minimize / Subject To / Binaries / End. Byte-stable for a
/// given model.
void export_lp(const IlpModel& model, std::ostream& out);
void export_lp(const IlpModel& model, const std::filesystem::path& path);

/// A cluster plus the depot relabelled 1..n: the depot becomes city 1 and
/// cluster cities follow in the given order.
struct SubInstance {
  Instance instance;
  std::vector<CityId> original_ids;
};

SubInstance relabel_subinstance(const Instance& inst, std::span<const CityId> cluster);

}  // namespace mvrp
