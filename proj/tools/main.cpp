#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "mvrp/error.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

std::vector<mvrp::CityId> parse_ids(const std::string& list) {
  std::vector<mvrp::CityId> ids;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw mvrp::cli::UsageError("bad city id '" + item + "' in --cluster");
    }
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mvrp::cli;

  CLI::App app{"Cluster-first route-second solver for the multiple vehicle routing problem"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::string config_file;
  std::vector<std::string> overrides;
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--out-dir", out_dir, "Output directory");
  app.add_option("--config", config_file, "File of key=value settings")->check(CLI::ExistingFile);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance")->fallthrough();
  GenOptions gen_opts;
  std::string gen_out;
  gen->add_option("-n,--cities", gen_opts.spec.n, "City count")->capture_default_str();
  gen->add_option("--side", gen_opts.spec.side, "Square side length")->capture_default_str();
  gen->add_option("--depot", gen_opts.spec.depot_index, "1-based depot position")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Instance file (default <out-dir>/instance.txt)");

  // solve / bench share the run configuration
  std::string instance_path;
  std::optional<std::size_t> k;
  std::optional<std::string> algorithm;
  std::optional<std::size_t> threads;
  auto* solve = app.add_subcommand("solve", "Cluster with k-means, then route each vehicle")->fallthrough();
  solve->add_option("-i,--instance", instance_path, "Instance file (default: generate)");
  solve->add_option("-k,--vehicles", k, "Vehicle count");
  solve->add_option("-a,--algorithm", algorithm, "ga | sa | tabu | exact");
  solve->add_option("-j,--threads", threads, "Worker threads for per-cluster routing");
  solve->add_option("-p,--param", overrides, "key=value override (repeatable)");

  std::optional<std::string> algorithms;
  std::optional<std::string> seeds;
  auto* bench = app.add_subcommand("bench", "Compare routing algorithms on shared clusterings")->fallthrough();
  bench->add_option("-i,--instance", instance_path, "Instance file (default: generate per seed)");
  bench->add_option("-k,--vehicles", k, "Vehicle count");
  bench->add_option("--algorithms", algorithms, "Comma-separated algorithms");
  bench->add_option("--seeds", seeds, "Comma-separated seeds");
  bench->add_option("-j,--threads", threads, "Worker threads for per-cluster routing");
  bench->add_option("-p,--param", overrides, "key=value override (repeatable)");

  PlotOptions plot_opts;
  std::string plot_report, plot_trace;
  auto* plot = app.add_subcommand("plot", "Render convergence and route SVGs")->fallthrough();
  plot->add_option("--report", plot_report, "report.json from solve");
  plot->add_option("--trace", plot_trace, "Single trace CSV");

  ExportLpOptions lp_opts;
  std::string lp_instance, lp_cluster, lp_report, lp_out;
  std::optional<std::size_t> lp_vehicle;
  auto* export_lp = app.add_subcommand("export-lp", "Write the time-indexed tour model as an LP file")->fallthrough();
  export_lp->add_option("-i,--instance", lp_instance, "Instance file")->required();
  export_lp->add_option("--cluster", lp_cluster, "Comma-separated city ids");
  export_lp->add_option("--report", lp_report, "report.json to take a vehicle's cluster from");
  export_lp->add_option("--vehicle", lp_vehicle, "1-based vehicle in --report");
  export_lp->add_option("-o,--out", lp_out, "LP file (default <out-dir>/model.lp)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    RunConfig config;
    if (!config_file.empty()) load_config_file(config, config_file);
    for (const std::string& o : overrides) apply_override(config, o);
    if (seed) config.seed = *seed;
    if (out_dir) config.out_dir = *out_dir;
    if (!instance_path.empty()) config.instance_path = instance_path;
    if (k) config.k = *k;
    if (algorithm) apply_override(config, "algorithm=" + *algorithm);
    if (algorithms) apply_override(config, "bench.algorithms=" + *algorithms);
    if (seeds) apply_override(config, "bench.seeds=" + *seeds);
    if (threads) config.threads = *threads;

    if (*gen) {
      gen_opts.seed = config.seed;
      gen_opts.out_path = gen_out.empty() ? config.out_dir / "instance.txt" : std::filesystem::path(gen_out);
      const GenOutcome g = cmd_gen(gen_opts);
      std::cout << gen_opts.out_path.string() << "  sha256:" << g.digest << '\n';
    } else if (*solve) {
      const SolveOutcome s = cmd_solve(config);
      for (const auto& v : s.routing.vehicles) {
        std::cout << "vehicle " << v.vehicle << ": " << v.cluster.size() << " cities, distance "
                  << v.distance << '\n';
      }
      std::cout << "total distance " << s.routing.total_distance << '\n'
                << "report " << (config.out_dir / "report.json").string() << '\n';
    } else if (*bench) {
      const BenchOutcome b = cmd_bench(config);
      std::cout << b.table;
    } else if (*plot) {
      if (!plot_report.empty()) plot_opts.report = plot_report;
      if (!plot_trace.empty()) plot_opts.trace = plot_trace;
      plot_opts.out_dir = config.out_dir;
      for (const auto& p : cmd_plot(plot_opts)) std::cout << p.string() << '\n';
    } else if (*export_lp) {
      lp_opts.instance = lp_instance;
      if (!lp_cluster.empty()) lp_opts.cluster = parse_ids(lp_cluster);
      if (!lp_report.empty()) lp_opts.report = lp_report;
      lp_opts.vehicle = lp_vehicle;
      lp_opts.out_path = lp_out.empty() ? config.out_dir / "model.lp" : std::filesystem::path(lp_out);
      const ExportLpOutcome r = cmd_export_lp(lp_opts, std::cerr);
      std::cout << lp_opts.out_path.string() << ": n = " << r.n << ", " << r.variables
                << " binaries, " << r.rows << " rows\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
