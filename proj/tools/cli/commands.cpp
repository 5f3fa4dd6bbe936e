#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "cli/digest.hpp"
#include "cli/svg.hpp"
#include "mvrp/error.hpp"
#include "mvrp/milp.hpp"
#include "mvrp/trace.hpp"

namespace mvrp::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string trace_file_name(std::size_t vehicle) {
  return "trace_vehicle_" + std::to_string(vehicle) + ".csv";
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, path.string() + ": " + e.what());
  }
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

GenOutcome cmd_gen(const GenOptions& options) {
  Instance inst = generate_random_instance(options.spec.n, options.spec.side,
                                           options.spec.depot_index, options.seed);
  if (options.out_path.has_parent_path()) ensure_dir(options.out_path.parent_path());
  write_instance(inst, options.out_path);
  std::string digest = instance_digest(inst);
  return {std::move(inst), std::move(digest)};
}

Instance load_or_generate(const RunConfig& config, std::uint64_t seed) {
  if (config.instance_path) return read_instance(*config.instance_path);
  return generate_random_instance(config.generator.n, config.generator.side,
                                  config.generator.depot_index, seed);
}

json params_json(const RunConfig& config) {
  const RouterParams& r = config.router;
  json sa = {{"cooling_rate", r.sa.cooling_rate}, {"min_temp", r.sa.min_temp}};
  sa["initial_temp"] = r.sa.initial_temp ? json(*r.sa.initial_temp) : json("auto");
  sa["steps_per_temp"] = r.sa.steps_per_temp ? json(*r.sa.steps_per_temp) : json("auto");
  json tabu = {{"max_iterations", r.tabu.max_iterations}};
  tabu["tenure"] = r.tabu.tenure ? json(*r.tabu.tenure) : json("auto");
  return {
      {"kmeans",
       {{"restarts", config.kmeans_restarts},
        {"max_iter", config.kmeans_max_iter},
        {"init", to_string(config.kmeans_init)}}},
      {"ga",
       {{"population_size", r.ga.population_size},
        {"mating_pool_size", r.ga.mating_pool_size},
        {"crossover_prob", r.ga.crossover_prob},
        {"mutation_prob", r.ga.mutation_prob},
        {"max_generations", r.ga.max_generations},
        {"stall_generations", r.ga.stall_generations},
        {"mutation", to_string(r.ga.mutation)}}},
      {"sa", sa},
      {"tabu", tabu},
      {"exact", {{"cap", r.exact_cap}}},
  };
}

SolveOutcome cmd_solve(const RunConfig& config) {
  config.validate();
  const std::string started = utc_now();
  Instance inst = load_or_generate(config, config.seed);
  const DistanceMatrix dm(inst);

  auto t0 = std::chrono::steady_clock::now();
  ClusterAssignment clustering = kmeans(inst, config.kmeans_params());
  const double clustering_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  RoutingResult routing = route_clusters(inst, dm, clustering, config.algorithm, config.router,
                                         config.seed, config.threads);
  const double routing_ms = ms_since(t0);

  ensure_dir(config.out_dir);
  write_instance(inst, config.out_dir / "instance.txt");

  json vehicles = json::array();
  for (const VehicleRoute& v : routing.vehicles) {
    write_trace_csv(v.trace, config.out_dir / trace_file_name(v.vehicle));
    vehicles.push_back({{"vehicle", v.vehicle},
                        {"cluster", v.cluster},
                        {"tour", v.tour},
                        {"distance", v.distance},
                        {"seed", v.seed},
                        {"trace", trace_file_name(v.vehicle)}});
  }

  json report = {
      {"schema_version", kReportSchemaVersion},
      {"instance",
       {{"file", "instance.txt"},
        {"digest", instance_digest(inst)},
        {"cities", inst.size()},
        {"depot", inst.depot_id()}}},
      {"k", config.k},
      {"algorithm", std::string(to_string(config.algorithm))},
      {"params", params_json(config)},
      {"master_seed", config.seed},
      {"clustering",
       {{"seed", clustering_seed(config.seed)},
        {"wcss", clustering.wcss},
        {"iterations", clustering.iterations},
        {"restart", clustering.restart},
        {"digest", clustering_digest(clustering)}}},
      {"vehicles", vehicles},
      {"total_distance", routing.total_distance},
      {kTimingField,
       {{"started_utc", started}, {"clustering_ms", clustering_ms}, {"routing_ms", routing_ms}}},
  };
  write_text(config.out_dir / "report.json", report.dump(2) + "\n");
  return {std::move(inst), std::move(clustering), std::move(routing), std::move(report)};
}

BenchOutcome cmd_bench(const RunConfig& config) {
  config.validate();
  if (config.bench_algorithms.empty()) throw InvalidParameter("bench needs at least one algorithm");
  if (config.bench_seeds.empty()) throw InvalidParameter("bench needs at least one seed");

  BenchOutcome outcome;
  std::ostringstream table;
  std::ostringstream csv;
  csv << "seed,algorithm,vehicle,distance,status,cluster_digest\n";

  for (std::uint64_t seed : config.bench_seeds) {
    std::optional<Instance> inst;
    std::optional<ClusterAssignment> clustering;
    std::string setup_error;
    try {
      inst = load_or_generate(config, seed);
      RunConfig seeded = config;
      seeded.seed = seed;
      clustering = kmeans(*inst, seeded.kmeans_params());
    } catch (const std::exception& e) {
      setup_error = e.what();
    }
    const std::string digest = clustering ? clustering_digest(*clustering) : "";
    std::optional<DistanceMatrix> dm;
    if (inst) dm.emplace(*inst);

    std::vector<BenchCell> row;
    for (Algorithm alg : config.bench_algorithms) {
      BenchCell cell;
      cell.seed = seed;
      cell.algorithm = alg;
      cell.cluster_digest = digest;
      if (!clustering) {
        cell.error = setup_error;
      } else {
        try {
          RoutingResult r = route_clusters(*inst, *dm, *clustering, alg, config.router, seed,
                                           config.threads);
          for (const VehicleRoute& v : r.vehicles) cell.distances.push_back(v.distance);
          cell.total = r.total_distance;
          cell.ok = true;
        } catch (const std::exception& e) {
          cell.error = e.what();
        }
      }
      const std::string name(to_string(alg));
      if (cell.ok) {
        for (std::size_t v = 0; v < cell.distances.size(); ++v) {
          csv << seed << ',' << name << ',' << v + 1 << ',' << format_double(cell.distances[v])
              << ",OK," << digest << '\n';
        }
        csv << seed << ',' << name << ",total," << format_double(cell.total) << ",OK," << digest
            << '\n';
      } else {
        csv << seed << ',' << name << ",total,,FAILED," << digest << '\n';
      }
      row.push_back(cell);
    }

    table << "seed " << seed << "  clusters " << (digest.empty() ? "-" : digest) << '\n';
    table << pad("vehicle", 8);
    for (Algorithm alg : config.bench_algorithms) table << pad(std::string(to_string(alg)), 12);
    table << '\n';
    for (std::size_t v = 0; v < config.k; ++v) {
      table << pad(std::to_string(v + 1), 8);
      for (const BenchCell& c : row) {
        table << pad(c.ok && v < c.distances.size() ? fixed(c.distances[v]) : "FAILED", 12);
      }
      table << '\n';
    }
    table << pad("total", 8);
    for (const BenchCell& c : row) table << pad(c.ok ? fixed(c.total) : "FAILED", 12);
    table << "\n\n";
    outcome.cells.insert(outcome.cells.end(), row.begin(), row.end());
  }

  // Summary: per algorithm mean/min total and how often it had the lowest
  // total for a seed (ties count for every tied algorithm).
  table << pad("algorithm", 10) << pad("runs", 6) << pad("failed", 8) << pad("mean_total", 12)
        << pad("min_total", 12) << pad("wins", 6) << '\n';
  for (Algorithm alg : config.bench_algorithms) {
    std::size_t runs = 0, failed = 0, wins = 0;
    double sum = 0.0, min = std::numeric_limits<double>::infinity();
    for (const BenchCell& c : outcome.cells) {
      if (c.algorithm != alg) continue;
      if (!c.ok) {
        ++failed;
        continue;
      }
      ++runs;
      sum += c.total;
      min = std::min(min, c.total);
      bool best = true;
      for (const BenchCell& o : outcome.cells) {
        if (o.seed == c.seed && o.ok && o.total < c.total) best = false;
      }
      wins += best ? 1 : 0;
    }
    table << pad(std::string(to_string(alg)), 10) << pad(std::to_string(runs), 6)
          << pad(std::to_string(failed), 8) << pad(runs ? fixed(sum / runs) : "-", 12)
          << pad(runs ? fixed(min) : "-", 12) << pad(std::to_string(wins), 6) << '\n';
  }

  outcome.table = table.str();
  ensure_dir(config.out_dir);
  write_text(config.out_dir / "bench.csv", csv.str());
  write_text(config.out_dir / "bench.txt", outcome.table);
  return outcome;
}

std::vector<fs::path> cmd_plot(const PlotOptions& options) {
  if (!options.report && !options.trace) throw InvalidParameter("plot needs a report or a trace");
  ensure_dir(options.out_dir);
  std::vector<fs::path> written;

  if (options.trace) {
    const Trace trace = read_trace_csv(*options.trace);
    const fs::path out = options.out_dir / "convergence.svg";
    write_text(out, convergence_svg(trace, "Convergence: " + options.trace->filename().string()));
    written.push_back(out);
  }
  if (options.report) {
    const json report = read_json(*options.report);
    const fs::path base = options.report->parent_path();
    try {
      const Instance inst = read_instance(base / report.at("instance").at("file").get<std::string>());
      std::vector<std::vector<CityId>> tours;
      for (const json& v : report.at("vehicles")) {
        const auto vehicle = v.at("vehicle").get<std::size_t>();
        const Trace trace = read_trace_csv(base / v.at("trace").get<std::string>());
        const fs::path out = options.out_dir / ("convergence_vehicle_" + std::to_string(vehicle) + ".svg");
        write_text(out, convergence_svg(trace, "Convergence, vehicle " + std::to_string(vehicle) + " (" +
                                                   report.at("algorithm").get<std::string>() + ")"));
        written.push_back(out);
        tours.push_back(v.at("tour").get<std::vector<CityId>>());
      }
      const fs::path out = options.out_dir / "routes.svg";
      write_text(out, route_map_svg(inst, tours));
      written.push_back(out);
    } catch (const json::exception& e) {
      throw ParseError(0, options.report->string() + ": " + e.what());
    }
  }
  return written;
}

ExportLpOutcome cmd_export_lp(const ExportLpOptions& options, std::ostream& log) {
  const Instance inst = read_instance(options.instance);
  std::vector<CityId> cluster;
  if (options.cluster) {
    cluster = *options.cluster;
  } else if (options.report) {
    if (!options.vehicle) throw InvalidParameter("--report needs --vehicle");
    const json report = read_json(*options.report);
    try {
      const json& vehicles = report.at("vehicles");
      const std::size_t v = *options.vehicle;
      if (v < 1 || v > vehicles.size()) {
        throw InvalidParameter("vehicle " + std::to_string(v) + " not in report");
      }
      cluster = vehicles.at(v - 1).at("cluster").get<std::vector<CityId>>();
    } catch (const json::exception& e) {
      throw ParseError(0, options.report->string() + ": " + e.what());
    }
  } else {
    cluster = inst.customer_ids();
  }

  const SubInstance sub = relabel_subinstance(inst, cluster);
  const DistanceMatrix dm(sub.instance);
  const IlpModel model = build_model(sub.instance, dm);
  ExportLpOutcome outcome{model.n(), model.variable_count(), model.row_count(), false};
  if (outcome.variables > kLpSizeWarning) {
    outcome.size_warning = true;
    log << "warning: model has " << outcome.variables << " binaries and " << outcome.rows
        << " rows (n = " << outcome.n << "); the LP file will be large\n";
  }
  if (options.out_path.has_parent_path()) ensure_dir(options.out_path.parent_path());
  export_lp(model, options.out_path);
  return outcome;
}

}  // namespace mvrp::cli
