#include "mvrp/milp.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include "mvrp/error.hpp"
#include "mvrp/trace.hpp"

namespace mvrp {

std::string RowId::name() const {
  switch (kind) {
    case RowKind::kOneArcPerStep:
      return "c2_t" + std::to_string(a);
    case RowKind::kLeaveOnce:
      return "c3_i" + std::to_string(a);
    case RowKind::kEnterOnce:
      return "c4_j" + std::to_string(a);
    case RowKind::kContinuity:
      return "c5_j" + std::to_string(a) + "_t" + std::to_string(b);
    case RowKind::kDomain:
      return "domain";
  }
  return "unknown";
}

IlpModel::IlpModel(std::size_t n, std::vector<double> costs) : n_(n), costs_(std::move(costs)) {
  if (n_ < 2) throw InvalidParameter("the tour model needs at least 2 cities");
  if (costs_.size() != n_ * n_) throw InvalidParameter("cost table must be n*n");
}

std::vector<ArcStep> IlpModel::variables() const {
  std::vector<ArcStep> vars;
  vars.reserve(variable_count());
  for (std::size_t t = 1; t <= n_; ++t) {
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t j = 1; j <= n_; ++j) {
        if (i != j) vars.push_back({i, j, t});
      }
    }
  }
  return vars;
}

std::vector<RowId> IlpModel::rows() const {
  std::vector<RowId> out;
  out.reserve(row_count());
  for (std::size_t t = 1; t <= n_; ++t) out.push_back({RowKind::kOneArcPerStep, t, 0});
  for (std::size_t i = 1; i <= n_; ++i) out.push_back({RowKind::kLeaveOnce, i, 0});
  for (std::size_t j = 1; j <= n_; ++j) out.push_back({RowKind::kEnterOnce, j, 0});
  for (std::size_t j = 1; j <= n_; ++j) {
    for (std::size_t t = 1; t <= n_; ++t) out.push_back({RowKind::kContinuity, j, t});
  }
  return out;
}

std::vector<RowTerm> IlpModel::row_terms(const RowId& row) const {
  std::vector<RowTerm> terms;
  switch (row.kind) {
    case RowKind::kOneArcPerStep:
      for (std::size_t i = 1; i <= n_; ++i) {
        for (std::size_t j = 1; j <= n_; ++j) {
          if (i != j) terms.push_back({{i, j, row.a}, 1.0});
        }
      }
      break;
    case RowKind::kLeaveOnce:
      for (std::size_t j = 1; j <= n_; ++j) {
        if (j == row.a) continue;
        for (std::size_t t = 1; t <= n_; ++t) terms.push_back({{row.a, j, t}, 1.0});
      }
      break;
    case RowKind::kEnterOnce:
      for (std::size_t i = 1; i <= n_; ++i) {
        if (i == row.a) continue;
        for (std::size_t t = 1; t <= n_; ++t) terms.push_back({{i, row.a, t}, 1.0});
      }
      break;
    case RowKind::kContinuity: {
      const std::size_t j = row.a;
      const std::size_t t = row.b;
      for (std::size_t i = 1; i <= n_; ++i) {
        if (i != j) terms.push_back({{i, j, t}, 1.0});
      }
      for (std::size_t k = 1; k <= n_; ++k) {
        if (k != j) terms.push_back({{j, k, next_step(t)}, -1.0});
      }
      break;
    }
    case RowKind::kDomain:
      break;
  }
  return terms;
}

IlpModel build_model(const Instance& inst, const DistanceMatrix& dm) {
  const std::size_t n = inst.size();
  if (n < 2) throw InvalidParameter("the tour model needs at least 2 cities");
  std::vector<double> costs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) costs[i * n + j] = dm.at(i, j);
  }
  return IlpModel(n, std::move(costs));
}

std::string variable_name(const ArcStep& v) {
  return "x_" + std::to_string(v.i) + "_" + std::to_string(v.j) + "_" + std::to_string(v.t);
}

IndicatorSolution::IndicatorSolution(std::vector<ArcStep> set_to_one) : ones(std::move(set_to_one)) {
  std::sort(ones.begin(), ones.end());
  ones.erase(std::unique(ones.begin(), ones.end()), ones.end());
}

bool IndicatorSolution::value(const ArcStep& v) const {
  return std::binary_search(ones.begin(), ones.end(), v);
}

IndicatorSolution tour_to_indicators(std::span<const CityId> tour, CityId depot_id,
                                     const Instance& inst) {
  if (!inst.contains(depot_id)) throw UnknownCityId(depot_id);
  std::unordered_set<CityId> seen;
  for (CityId id : tour) {
    if (id == depot_id) throw IncompleteTour("tour lists the depot");
    if (!inst.contains(id)) throw IncompleteTour("tour lists unknown city " + std::to_string(id));
    if (!seen.insert(id).second) throw IncompleteTour("tour repeats city " + std::to_string(id));
  }
  if (tour.size() + 1 != inst.size()) {
    for (CityId id : inst.customer_ids()) {
      if (!seen.contains(id)) throw IncompleteTour("tour misses city " + std::to_string(id));
    }
  }

  std::vector<std::size_t> stops;
  stops.reserve(inst.size() + 1);
  stops.push_back(inst.index_of(depot_id) + 1);
  for (CityId id : tour) stops.push_back(inst.index_of(id) + 1);
  stops.push_back(stops.front());

  std::vector<ArcStep> ones;
  for (std::size_t t = 1; t < stops.size(); ++t) ones.push_back({stops[t - 1], stops[t], t});
  return IndicatorSolution(std::move(ones));
}

FeasibilityVerdict check_feasibility(const IndicatorSolution& sol, const IlpModel& model) {
  const std::size_t n = model.n();
  FeasibilityVerdict verdict;
  std::vector<int> per_step(n + 1, 0);
  std::vector<int> leaving(n + 1, 0);
  std::vector<int> entering(n + 1, 0);
  // in_at[j * (n + 1) + t]: arcs entering j at step t; out_at likewise.
  std::vector<int> in_at((n + 1) * (n + 1), 0);
  std::vector<int> out_at((n + 1) * (n + 1), 0);

  for (const ArcStep& v : sol.ones) {
    if (!model.contains(v)) {
      verdict.violated = RowId{RowKind::kDomain, 0, 0};
      verdict.lhs = 1.0;
      verdict.rhs = 0.0;
      return verdict;
    }
    verdict.objective += model.cost(v.i, v.j);
    ++per_step[v.t];
    ++leaving[v.i];
    ++entering[v.j];
    ++in_at[v.j * (n + 1) + v.t];
    ++out_at[v.i * (n + 1) + v.t];
  }

  auto fail = [&](RowId row, int lhs) {
    verdict.violated = row;
    verdict.lhs = lhs;
    verdict.rhs = model.row_rhs(row);
    return verdict;
  };
  for (std::size_t t = 1; t <= n; ++t) {
    if (per_step[t] != 1) return fail({RowKind::kOneArcPerStep, t, 0}, per_step[t]);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (leaving[i] != 1) return fail({RowKind::kLeaveOnce, i, 0}, leaving[i]);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    if (entering[j] != 1) return fail({RowKind::kEnterOnce, j, 0}, entering[j]);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t t = 1; t <= n; ++t) {
      const int lhs = in_at[j * (n + 1) + t] - out_at[j * (n + 1) + model.next_step(t)];
      if (lhs != 0) return fail({RowKind::kContinuity, j, t}, lhs);
    }
  }
  verdict.feasible = true;
  return verdict;
}

namespace {

constexpr std::size_t kTermsPerLine = 8;

// Visits x_ijt in (t, i, j) order without materializing the variable list,
// which runs to millions of entries for full-size instances.
template <class Fn>
void for_each_variable(std::size_t n, Fn&& fn) {
  for (std::size_t t = 1; t <= n; ++t) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i != j) fn(ArcStep{i, j, t});
      }
    }
  }
}

void write_term(std::ostream& out, std::size_t k, double coef, const ArcStep& v,
                bool always_coef) {
  if (k > 0 && k % kTermsPerLine == 0) out << "\n  ";
  if (k == 0) {
    out << (coef < 0 ? " -" : "");
  } else {
    out << (coef < 0 ? " -" : " +");
  }
  const double mag = coef < 0 ? -coef : coef;
  out << ' ';
  if (always_coef || mag != 1.0) out << format_double(mag) << ' ';
  out << variable_name(v);
}

}  // namespace

void export_lp(const IlpModel& model, std::ostream& out) {
  const std::size_t n = model.n();
  out << "\\ Time-indexed tour model, n = " << n << ", " << model.variable_count()
      << " binaries, " << model.row_count() << " rows\n";
  out << "\\ Objective sums d_ij x_ijt over all ordered pairs i != j (self-loops excluded)\n";
  out << "\\ Step t+1 wraps to 1 after t = " << n << " in the c5 continuity rows\n";

  out << "Minimize\n obj:";
  std::size_t k = 0;
  // Zero-cost arcs (coincident cities) are kept so every binary appears.
  for_each_variable(n, [&](const ArcStep& v) { write_term(out, k++, model.cost(v.i, v.j), v, true); });
  out << "\nSubject To\n";
  for (const RowId& row : model.rows()) {
    out << ' ' << row.name() << ':';
    const std::vector<RowTerm> terms = model.row_terms(row);
    for (std::size_t t = 0; t < terms.size(); ++t) write_term(out, t, terms[t].coef, terms[t].var, false);
    out << " = " << format_double(model.row_rhs(row)) << '\n';
  }
  out << "Binaries\n";
  k = 0;
  for_each_variable(n, [&](const ArcStep& v) {
    out << ' ' << variable_name(v);
    if (++k % kTermsPerLine == 0) out << '\n';
  });
  if (k % kTermsPerLine != 0) out << '\n';
  out << "End\n";
}

void export_lp(const IlpModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write LP file " + path.string());
  export_lp(model, out);
  if (!out) throw IoError("write failed for " + path.string());
}

SubInstance relabel_subinstance(const Instance& inst, std::span<const CityId> cluster) {
  std::vector<City> cities;
  std::vector<CityId> original;
  const City& depot = inst.depot();
  cities.push_back({1, depot.x, depot.y});
  original.push_back(depot.id);
  std::unordered_set<CityId> seen{depot.id};
  for (CityId id : cluster) {
    if (!seen.insert(id).second) {
      throw InvalidParameter("cluster repeats city " + std::to_string(id) +
                             " or contains the depot");
    }
    const City& c = inst.city(id);
    cities.push_back({static_cast<CityId>(cities.size() + 1), c.x, c.y});
    original.push_back(id);
  }
  return {Instance(std::move(cities), 1), std::move(original)};
}

}  // namespace mvrp
