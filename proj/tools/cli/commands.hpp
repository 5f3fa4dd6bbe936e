#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"
#include "mvrp/clustering.hpp"
#include "mvrp/instance.hpp"
#include "mvrp/pipeline.hpp"

namespace mvrp::cli {

inline constexpr int kReportSchemaVersion = 1;
/// The one report field that differs between identical runs.
inline constexpr const char* kTimingField = "timing";
/// export-lp prints a size warning above this many binaries.
inline constexpr std::size_t kLpSizeWarning = 1'000'000;

struct GenOptions {
  GeneratorSpec spec;
  std::uint64_t seed = 0;
  std::filesystem::path out_path = "instance.txt";
};

struct GenOutcome {
  Instance instance;
  std::string digest;
};

GenOutcome cmd_gen(const GenOptions& options);

/// Instance named by the config, or the generator seeded with `seed`.
Instance load_or_generate(const RunConfig& config, std::uint64_t seed);

struct SolveOutcome {
  Instance instance;
  ClusterAssignment clustering;
  RoutingResult routing;
  nlohmann::json report;
};

/// k-means then per-cluster routing. Writes into config.out_dir:
///   instance.txt             canonical copy of the solved instance
///   report.json              SolveReport
///   trace_vehicle_<v>.csv    convergence trace per vehicle
SolveOutcome cmd_solve(const RunConfig& config);

nlohmann::json params_json(const RunConfig& config);

struct BenchCell {
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kGa;
  bool ok = false;
  std::string error;
  std::string cluster_digest;
  std::vector<double> distances;  // per vehicle
  double total = 0.0;
};

struct BenchOutcome {
  std::vector<BenchCell> cells;  // seed-major, algorithm-minor
  std::string table;
};

/// One clustering per seed shared by every algorithm. Writes bench.csv and
/// bench.txt into config.out_dir. A failing cell is marked FAILED and the
/// run continues.
BenchOutcome cmd_bench(const RunConfig& config);

struct PlotOptions {
  std::optional<std::filesystem::path> report;
  std::optional<std::filesystem::path> trace;
  std::filesystem::path out_dir = ".";
};

/// With a report: convergence_vehicle_<v>.svg per vehicle plus routes.svg.
/// With a trace: convergence.svg. Returns the files written.
std::vector<std::filesystem::path> cmd_plot(const PlotOptions& options);

struct ExportLpOptions {
  std::filesystem::path instance;
  std::optional<std::vector<CityId>> cluster;
  std::optional<std::filesystem::path> report;
  std::optional<std::size_t> vehicle;
  std::filesystem::path out_path = "model.lp";
};

struct ExportLpOutcome {
  std::size_t n = 0;
  std::size_t variables = 0;
  std::size_t rows = 0;
  bool size_warning = false;
};

/// Relabels the chosen cluster (or the whole instance) with the depot as
/// city 1 and writes the tour model. Size warnings go to `log`.
ExportLpOutcome cmd_export_lp(const ExportLpOptions& options, std::ostream& log);

}  // namespace mvrp::cli
